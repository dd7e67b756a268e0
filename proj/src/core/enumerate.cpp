#include "enumerate.hpp"

#include <algorithm>
#include <set>

namespace homcount {

namespace {

struct Generator {
    const EnumSpec& spec;
    std::vector<EnumeratedGraph> out;

    bool degreesFeasible(const SimpleGraph& g) const {
        // Each of the remaining vertices can raise a degree by at most 1.
        int remaining = spec.n - g.vertexCount();
        for (int v = 0; v < g.vertexCount(); ++v)
            if (g.degree(v) + remaining < spec.minDegree) return false;
        return true;
    }

    void emit(const Certificate& cert, const SimpleGraph& canonical) {
        if (spec.connectedOnly && !classifyGraph(canonical).isConnected) return;
        if (!spec.shardPrefix.empty() &&
            cert.hex().compare(0, spec.shardPrefix.size(), spec.shardPrefix) != 0)
            return;
        out.push_back({cert, canonical});
    }

    void extend(const SimpleGraph& cur, const Certificate& curCert) {
        int v = cur.vertexCount();
        if (v == spec.n) {
            emit(curCert, cur);
            return;
        }
        std::set<Certificate> seen;
        auto curEdges = cur.edges();
        for (VertexSet mask = 0; mask < (VertexSet{1} << v); ++mask) {
            auto edges = curEdges;
            VertexSet m = mask;
            while (m) {
                int u = lowestBit(m);
                m &= m - 1;
                edges.emplace_back(u, v);
            }
            SimpleGraph candidate = SimpleGraph::fromEdges(v + 1, edges);
            if (!degreesFeasible(candidate)) continue;

            auto canon = canonicalize(candidate);
            if (!seen.insert(canon.certificate).second) continue;
            SimpleGraph canonical = candidate.permuted(canon.labeling);

            // Parent check: deleting the canonically-last vertex must lead
            // back to the graph this branch extended.
            SimpleGraph parent = canonical.inducedSubgraph(fullSet(v));
            if (certificateOf(parent) != curCert) continue;

            extend(canonical, canon.certificate);
        }
    }
};

}  // namespace

std::vector<EnumeratedGraph> enumerateGraphs(const EnumSpec& spec) {
    if (spec.n < 0) throw GraphError("negative vertex count");
    if (spec.n > spec.cap) throw BudgetError("enumerate: n exceeds cap");

    Generator gen{spec, {}};
    if (spec.n == 0) {
        if (spec.minDegree == 0) gen.emit(certificateOf(SimpleGraph()), SimpleGraph());
    } else if (spec.minDegree <= spec.n - 1) {
        SimpleGraph root = SimpleGraph::fromEdges(1, {});
        gen.extend(root, certificateOf(root));
    }
    std::sort(gen.out.begin(), gen.out.end(),
              [](const EnumeratedGraph& a, const EnumeratedGraph& b) {
                  return a.certificate < b.certificate;
              });
    return gen.out;
}

std::uint64_t countClasses(const EnumSpec& spec) { return enumerateGraphs(spec).size(); }

}  // namespace homcount
