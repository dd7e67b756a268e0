#include "canonical.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace homcount {

std::string Certificate::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(bytes_.size() * 2);
    for (std::uint8_t b : bytes_) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 15]);
    }
    return out;
}

Certificate Certificate::fromHex(const std::string& hex) {
    if (hex.size() % 2 != 0) throw ParseError("odd-length certificate hex");
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        throw ParseError("bad certificate hex digit");
    };
    std::vector<std::uint8_t> bytes(hex.size() / 2);
    for (size_t i = 0; i < bytes.size(); ++i)
        bytes[i] = static_cast<std::uint8_t>((nibble(hex[2 * i]) << 4) | nibble(hex[2 * i + 1]));
    return Certificate(std::move(bytes));
}

namespace {

// Ordered partition of the vertices into cells; cell order is part of the
// state and every operation below keeps it isomorphism-invariant.
using Cells = std::vector<VertexSet>;

struct UnionFind {
    std::array<int, kMaxVertices> parent;
    explicit UnionFind(int n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[b] = a;
    }
};

class Canonizer {
public:
    Canonizer(int n, const std::vector<VertexSet>& rows) : n_(n), rows_(rows) {}

    CanonicalResult run() {
        if (n_ == 0) {
            CanonicalResult r;
            r.certificate = Certificate({0});
            return r;
        }
        Cells cells = initialCells();
        std::vector<int> prefix;
        search(cells, prefix);
        CanonicalResult r;
        r.certificate = Certificate(std::move(best_));
        r.labeling = std::move(bestLabeling_);
        return r;
    }

private:
    Cells initialCells() const {
        // Invariant initial colouring by (loop flag, degree).
        std::vector<std::pair<int, int>> keys(n_);
        for (int v = 0; v < n_; ++v)
            keys[v] = {int((rows_[v] >> v) & 1), popcount(rows_[v])};
        auto sorted = keys;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        Cells cells(sorted.size(), 0);
        for (int v = 0; v < n_; ++v) {
            size_t c = std::lower_bound(sorted.begin(), sorted.end(), keys[v]) - sorted.begin();
            cells[c] |= VertexSet{1} << v;
        }
        return cells;
    }

    void refine(Cells& cells) const {
        while (true) {
            size_t before = cells.size();
            // Key per vertex: (current cell, neighbour count in each cell).
            std::vector<std::vector<int>> key(n_);
            std::vector<int> cellOf(n_, 0);
            for (size_t c = 0; c < cells.size(); ++c) {
                VertexSet m = cells[c];
                while (m) {
                    int v = lowestBit(m);
                    m &= m - 1;
                    cellOf[v] = static_cast<int>(c);
                }
            }
            for (int v = 0; v < n_; ++v) {
                key[v].reserve(cells.size() + 1);
                key[v].push_back(cellOf[v]);
                for (const VertexSet& cell : cells)
                    key[v].push_back(popcount(rows_[v] & cell));
            }
            auto sorted = key;
            std::sort(sorted.begin(), sorted.end());
            sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
            Cells next(sorted.size(), 0);
            for (int v = 0; v < n_; ++v) {
                size_t c = std::lower_bound(sorted.begin(), sorted.end(), key[v]) - sorted.begin();
                next[c] |= VertexSet{1} << v;
            }
            cells = std::move(next);
            if (cells.size() == before) return;
        }
    }

    void search(Cells cells, std::vector<int>& prefix) {
        refine(cells);
        int branchCell = -1;
        for (size_t c = 0; c < cells.size(); ++c) {
            if (popcount(cells[c]) > 1) {
                branchCell = static_cast<int>(c);
                break;
            }
        }
        if (branchCell < 0) {
            leaf(cells);
            return;
        }

        std::vector<int> triedRoots;
        VertexSet m = cells[branchCell];
        while (m) {
            int v = lowestBit(m);
            m &= m - 1;
            // Skip vertices equivalent to an already-tried one under a
            // known automorphism fixing the individualized prefix.
            UnionFind uf = stabilizerOrbits(prefix);
            int root = uf.find(v);
            if (std::find(triedRoots.begin(), triedRoots.end(), root) != triedRoots.end())
                continue;
            triedRoots.push_back(root);

            Cells child;
            child.reserve(cells.size() + 1);
            for (int c = 0; c < static_cast<int>(cells.size()); ++c) {
                if (c == branchCell) {
                    child.push_back(VertexSet{1} << v);
                    child.push_back(cells[c] & ~(VertexSet{1} << v));
                } else {
                    child.push_back(cells[c]);
                }
            }
            prefix.push_back(v);
            search(std::move(child), prefix);
            prefix.pop_back();
        }
    }

    UnionFind stabilizerOrbits(const std::vector<int>& prefix) {
        UnionFind uf(n_);
        for (const auto& sigma : autos_) {
            bool fixes = true;
            for (int p : prefix) {
                if (sigma[p] != p) {
                    fixes = false;
                    break;
                }
            }
            if (!fixes) continue;
            for (int v = 0; v < n_; ++v) uf.unite(v, sigma[v]);
        }
        return uf;
    }

    void leaf(const Cells& cells) {
        std::vector<int> labeling(n_, 0);
        for (size_t c = 0; c < cells.size(); ++c)
            labeling[lowestBit(cells[c])] = static_cast<int>(c);

        std::vector<std::uint8_t> cert = buildCert(labeling);
        if (!haveBest_ || cert < best_) {
            best_ = std::move(cert);
            bestLabeling_ = labeling;
            haveBest_ = true;
        } else if (cert == best_) {
            // Two labelings producing the same bytes witness an automorphism.
            std::vector<int> bestInv(n_, 0);
            for (int v = 0; v < n_; ++v) bestInv[bestLabeling_[v]] = v;
            std::vector<int> sigma(n_, 0);
            for (int v = 0; v < n_; ++v) sigma[v] = bestInv[labeling[v]];
            autos_.push_back(std::move(sigma));
        }
    }

    std::vector<std::uint8_t> buildCert(const std::vector<int>& labeling) const {
        std::vector<int> inv(n_, 0);
        for (int v = 0; v < n_; ++v) inv[labeling[v]] = v;
        std::vector<std::uint8_t> out;
        out.push_back(static_cast<std::uint8_t>(n_));
        int acc = 0, nbits = 0;
        auto push = [&](bool bit) {
            acc = (acc << 1) | (bit ? 1 : 0);
            if (++nbits == 8) {
                out.push_back(static_cast<std::uint8_t>(acc));
                acc = 0;
                nbits = 0;
            }
        };
        for (int p = 0; p < n_; ++p) push((rows_[inv[p]] >> inv[p]) & 1);
        if (nbits) {
            out.push_back(static_cast<std::uint8_t>(acc << (8 - nbits)));
            acc = 0;
            nbits = 0;
        }
        for (int p = 1; p < n_; ++p)
            for (int q = 0; q < p; ++q) push((rows_[inv[p]] >> inv[q]) & 1);
        if (nbits) out.push_back(static_cast<std::uint8_t>(acc << (8 - nbits)));
        return out;
    }

    int n_;
    const std::vector<VertexSet>& rows_;
    std::vector<std::uint8_t> best_;
    std::vector<int> bestLabeling_;
    bool haveBest_ = false;
    std::vector<std::vector<int>> autos_;
};

}  // namespace

CanonicalResult canonicalizeRows(int n, const std::vector<VertexSet>& rows) {
    return Canonizer(n, rows).run();
}

CanonicalResult canonicalize(const SimpleGraph& g) {
    return canonicalizeRows(g.vertexCount(), g.rows());
}

CanonicalResult canonicalize(const TargetGraph& h) {
    return canonicalizeRows(h.vertexCount(), h.rows());
}

Certificate certificateOf(const SimpleGraph& g) { return canonicalize(g).certificate; }

Certificate certificateOf(const TargetGraph& h) { return canonicalize(h).certificate; }

SimpleGraph canonicalForm(const SimpleGraph& g) {
    return g.permuted(canonicalize(g).labeling);
}

TargetGraph canonicalForm(const TargetGraph& h) {
    return h.permuted(canonicalize(h).labeling);
}

}  // namespace homcount
