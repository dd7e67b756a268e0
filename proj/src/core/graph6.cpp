#include "graph6.hpp"

#include <vector>

namespace homcount {

namespace {

void appendSextets(std::string& out, const std::vector<bool>& bits) {
    for (size_t i = 0; i < bits.size(); i += 6) {
        int sextet = 0;
        for (size_t j = 0; j < 6; ++j) {
            sextet <<= 1;
            if (i + j < bits.size() && bits[i + j]) sextet |= 1;
        }
        out.push_back(static_cast<char>(sextet + 63));
    }
}

}  // namespace

std::string graph6Encode(const SimpleGraph& g) {
    int n = g.vertexCount();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
    std::vector<bool> bits;
    bits.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) bits.push_back(g.adjacent(u, v));
    appendSextets(out, bits);
    return out;
}

SimpleGraph graph6Decode(const std::string& bytes) {
    size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= bytes.size()) throw ParseError("graph6: truncated input");
        unsigned char c = static_cast<unsigned char>(bytes[pos++]);
        if (c < 63 || c > 126) throw ParseError("graph6: byte out of range");
        return c;
    };

    int n;
    int first = next();
    if (first < 126) {
        n = first - 63;
    } else {
        // 126 introduces the 18-bit form; 126 126 (the 36-bit form) is
        // beyond the vertex cap anyway.
        int a = next();
        if (a == 126) throw ParseError("graph6: vertex count exceeds cap");
        int b = next();
        int c = next();
        n = ((a - 63) << 12) | ((b - 63) << 6) | (c - 63);
    }
    if (n > kMaxVertices) throw ParseError("graph6: vertex count exceeds cap");

    size_t nbits = static_cast<size_t>(n) * (n - 1) / 2;
    size_t nbytes = (nbits + 5) / 6;
    if (bytes.size() - pos != nbytes) throw ParseError("graph6: wrong body length");

    std::vector<bool> bits;
    bits.reserve(nbytes * 6);
    for (size_t i = 0; i < nbytes; ++i) {
        int sextet = next() - 63;
        for (int j = 5; j >= 0; --j) bits.push_back((sextet >> j) & 1);
    }
    for (size_t i = nbits; i < bits.size(); ++i)
        if (bits[i]) throw ParseError("graph6: nonzero padding");

    std::vector<std::pair<int, int>> edges;
    size_t idx = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (bits[idx++]) edges.emplace_back(u, v);
    return SimpleGraph::fromEdges(n, edges);
}

}  // namespace homcount
