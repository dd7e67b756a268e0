#include "target_json.hpp"

#include <algorithm>

namespace homcount {

using nlohmann::json;

json targetToJson(const TargetGraph& h) {
    json j;
    j["n"] = h.vertexCount();
    j["loops"] = h.loops();
    json edges = json::array();
    for (auto [u, v] : h.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    return j;
}

TargetGraph targetFromJson(const json& j) {
    if (!j.is_object() || !j.contains("n")) throw ParseError("target json: missing n");
    int n = j.at("n").get<int>();
    std::vector<int> loops;
    if (j.contains("loops")) loops = j.at("loops").get<std::vector<int>>();
    std::vector<std::pair<int, int>> edges;
    if (j.contains("edges")) {
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw ParseError("target json: bad edge");
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
    }
    try {
        return TargetGraph::fromParts(n, loops, edges);
    } catch (const GraphError& e) {
        throw ParseError(std::string("target json: ") + e.what());
    }
}

TargetGraph targetFromJsonText(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("target json: parse failure");
    return targetFromJson(j);
}

namespace {

bool parseUint(const std::string& s, size_t from, size_t to, int& out) {
    if (from >= to) return false;
    long value = 0;
    for (size_t i = from; i < to; ++i) {
        if (s[i] < '0' || s[i] > '9') return false;
        value = value * 10 + (s[i] - '0');
        if (value > 1'000'000) return false;
    }
    out = static_cast<int>(value);
    return true;
}

}  // namespace

TargetGraph targetFromName(const std::string& raw) {
    std::string name = raw;
    if (name.rfind("named:", 0) == 0) name = name.substr(6);

    int a = 0, b = 0;
    if (name.rfind("Kloop", 0) == 0 && parseUint(name, 5, name.size(), a))
        return TargetGraph::completeLooped(a);
    if (name.rfind("Kb", 0) == 0 && parseUint(name, 2, name.size(), a))
        return TargetGraph::balancedBiclique(a);
    if (name.rfind("Turan", 0) == 0) {
        size_t underscore = name.find('_', 5);
        if (underscore != std::string::npos && parseUint(name, 5, underscore, a) &&
            parseUint(name, underscore + 1, name.size(), b))
            return TargetGraph::fromSimple(SimpleGraph::turan(a, b));
    }
    size_t x = name.find("xK");
    if (x != std::string::npos && parseUint(name, 0, x, a) &&
        parseUint(name, x + 2, name.size(), b))
        return TargetGraph::disjointCopies(a, TargetGraph::completeSimple(b));
    if (name.rfind("K", 0) == 0 && parseUint(name, 1, name.size(), a))
        return TargetGraph::completeSimple(a);

    throw ParseError("unknown named target: " + raw);
}

}  // namespace homcount
