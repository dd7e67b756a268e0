#include "graph.hpp"

#include <algorithm>
#include <numeric>

namespace homcount {

namespace {

void checkVertexCount(int n) {
    if (n < 0) throw GraphError("negative vertex count");
    if (n > kMaxVertices) throw GraphError("vertex count exceeds compile-time cap");
}

}  // namespace

SimpleGraph SimpleGraph::fromEdges(int n, const std::vector<std::pair<int, int>>& edges) {
    checkVertexCount(n);
    std::vector<VertexSet> adj(n, 0);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw GraphError("edge endpoint out of range");
        if (u == v) throw GraphError("loop not allowed in simple graph");
        adj[u] |= VertexSet{1} << v;
        adj[v] |= VertexSet{1} << u;
    }
    return SimpleGraph(n, std::move(adj));
}

SimpleGraph SimpleGraph::completeBipartite(int a, int b) {
    if (a < 0 || b < 0) throw GraphError("negative class size");
    checkVertexCount(a + b);
    std::vector<VertexSet> adj(a + b, 0);
    VertexSet left = fullSet(a);
    VertexSet right = fullSet(a + b) & ~left;
    for (int v = 0; v < a; ++v) adj[v] = right;
    for (int v = a; v < a + b; ++v) adj[v] = left;
    return SimpleGraph(a + b, std::move(adj));
}

SimpleGraph SimpleGraph::complete(int n) {
    checkVertexCount(n);
    std::vector<VertexSet> adj(n, 0);
    for (int v = 0; v < n; ++v) adj[v] = fullSet(n) & ~(VertexSet{1} << v);
    return SimpleGraph(n, std::move(adj));
}

SimpleGraph SimpleGraph::path(int n) {
    checkVertexCount(n);
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return fromEdges(n, edges);
}

SimpleGraph SimpleGraph::cycle(int n) {
    if (n < 3) throw GraphError("cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return fromEdges(n, edges);
}

std::vector<int> SimpleGraph::turanClassSizes(int t, int x) {
    if (t < 1) throw GraphError("turan needs t >= 1");
    if (x < 0) throw GraphError("negative vertex count");
    std::vector<int> sizes(t, x / t);
    for (int i = 0; i < x % t; ++i) sizes[i] += 1;  // largest classes first
    return sizes;
}

SimpleGraph SimpleGraph::turan(int t, int x) {
    checkVertexCount(x);
    auto sizes = turanClassSizes(t, x);
    std::vector<VertexSet> classMask(t, 0);
    int next = 0;
    for (int c = 0; c < t; ++c) {
        for (int i = 0; i < sizes[c]; ++i) classMask[c] |= VertexSet{1} << next++;
    }
    std::vector<VertexSet> adj(x, 0);
    for (int c = 0; c < t; ++c) {
        VertexSet others = fullSet(x) & ~classMask[c];
        VertexSet m = classMask[c];
        while (m) {
            int v = lowestBit(m);
            m &= m - 1;
            adj[v] = others;
        }
    }
    return SimpleGraph(x, std::move(adj));
}

SimpleGraph SimpleGraph::turanMinusMatching(int t, int x, int classA, int classB) {
    auto sizes = turanClassSizes(t, x);
    if (classA < 0 || classA >= t || classB < 0 || classB >= t || classA == classB)
        throw GraphError("bad class index");
    if (sizes[classA] != sizes[classB])
        throw GraphError("matched classes must have equal size");
    std::vector<int> start(t, 0);
    for (int c = 1; c < t; ++c) start[c] = start[c - 1] + sizes[c - 1];
    SimpleGraph g = turan(t, x);
    auto adj = g.adj_;
    for (int i = 0; i < sizes[classA]; ++i) {
        int u = start[classA] + i;
        int v = start[classB] + i;
        adj[u] &= ~(VertexSet{1} << v);
        adj[v] &= ~(VertexSet{1} << u);
    }
    return SimpleGraph(x, std::move(adj));
}

SimpleGraph SimpleGraph::disjointUnion(const SimpleGraph& g, const SimpleGraph& h) {
    checkVertexCount(g.n_ + h.n_);
    std::vector<VertexSet> adj(g.n_ + h.n_, 0);
    for (int v = 0; v < g.n_; ++v) adj[v] = g.adj_[v];
    for (int v = 0; v < h.n_; ++v) adj[g.n_ + v] = h.adj_[v] << g.n_;
    return SimpleGraph(g.n_ + h.n_, std::move(adj));
}

int SimpleGraph::edgeCount() const {
    int deg = 0;
    for (int v = 0; v < n_; ++v) deg += degree(v);
    return deg / 2;
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
}

SimpleGraph SimpleGraph::permuted(const std::vector<int>& perm) const {
    std::vector<VertexSet> adj(n_, 0);
    for (int u = 0; u < n_; ++u) {
        VertexSet m = adj_[u];
        while (m) {
            int v = lowestBit(m);
            m &= m - 1;
            adj[perm[u]] |= VertexSet{1} << perm[v];
        }
    }
    return SimpleGraph(n_, std::move(adj));
}

SimpleGraph SimpleGraph::inducedSubgraph(VertexSet keep) const {
    std::vector<int> newIndex(n_, -1);
    int m = 0;
    for (int v = 0; v < n_; ++v)
        if ((keep >> v) & 1) newIndex[v] = m++;
    std::vector<VertexSet> adj(m, 0);
    for (int u = 0; u < n_; ++u) {
        if (newIndex[u] < 0) continue;
        VertexSet row = adj_[u] & keep;
        while (row) {
            int v = lowestBit(row);
            row &= row - 1;
            adj[newIndex[u]] |= VertexSet{1} << newIndex[v];
        }
    }
    return SimpleGraph(m, std::move(adj));
}

TargetGraph TargetGraph::fromParts(int n, const std::vector<int>& loops,
                                   const std::vector<std::pair<int, int>>& edges) {
    checkVertexCount(n);
    std::vector<VertexSet> adj(n, 0);
    for (int v : loops) {
        if (v < 0 || v >= n) throw GraphError("loop vertex out of range");
        adj[v] |= VertexSet{1} << v;
    }
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw GraphError("edge endpoint out of range");
        if (u == v) throw GraphError("use the loop list for loops");
        adj[u] |= VertexSet{1} << v;
        adj[v] |= VertexSet{1} << u;
    }
    return TargetGraph(n, std::move(adj));
}

TargetGraph TargetGraph::fromSimple(const SimpleGraph& g) {
    return TargetGraph(g.vertexCount(), g.rows());
}

TargetGraph TargetGraph::completeLooped(int k) {
    if (k < 1) throw GraphError("completeLooped needs k >= 1");
    checkVertexCount(k);
    std::vector<VertexSet> adj(k, fullSet(k));
    return TargetGraph(k, std::move(adj));
}

TargetGraph TargetGraph::balancedBiclique(int k) {
    if (k < 1) throw GraphError("balancedBiclique needs k >= 1");
    return fromSimple(SimpleGraph::completeBipartite(k, k));
}

TargetGraph TargetGraph::completeSimple(int q) {
    if (q < 1) throw GraphError("completeSimple needs q >= 1");
    return fromSimple(SimpleGraph::complete(q));
}

TargetGraph TargetGraph::disjointCopies(int m, const TargetGraph& base) {
    if (m < 1) throw GraphError("disjointCopies needs m >= 1");
    checkVertexCount(m * base.n_);
    TargetGraph out(0, {});
    for (int i = 0; i < m; ++i) out = disjointUnion(out, base);
    return out;
}

TargetGraph TargetGraph::disjointUnion(const TargetGraph& g, const TargetGraph& h) {
    checkVertexCount(g.n_ + h.n_);
    std::vector<VertexSet> adj(g.n_ + h.n_, 0);
    for (int v = 0; v < g.n_; ++v) adj[v] = g.adj_[v];
    for (int v = 0; v < h.n_; ++v) adj[g.n_ + v] = h.adj_[v] << g.n_;
    return TargetGraph(g.n_ + h.n_, std::move(adj));
}

int TargetGraph::maxDegree() const {
    int k = 0;
    for (int v = 0; v < n_; ++v) k = std::max(k, degree(v));
    return k;
}

std::vector<int> TargetGraph::loops() const {
    std::vector<int> out;
    for (int v = 0; v < n_; ++v)
        if (looped(v)) out.push_back(v);
    return out;
}

std::vector<std::pair<int, int>> TargetGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
}

TargetGraph TargetGraph::permuted(const std::vector<int>& perm) const {
    std::vector<VertexSet> adj(n_, 0);
    for (int u = 0; u < n_; ++u) {
        VertexSet m = adj_[u];
        while (m) {
            int v = lowestBit(m);
            m &= m - 1;
            adj[perm[u]] |= VertexSet{1} << perm[v];
        }
    }
    return TargetGraph(n_, std::move(adj));
}

TargetGraph TargetGraph::inducedSubgraph(VertexSet keep) const {
    std::vector<int> newIndex(n_, -1);
    int m = 0;
    for (int v = 0; v < n_; ++v)
        if ((keep >> v) & 1) newIndex[v] = m++;
    std::vector<VertexSet> adj(m, 0);
    for (int u = 0; u < n_; ++u) {
        if (newIndex[u] < 0) continue;
        VertexSet row = adj_[u] & keep;
        while (row) {
            int v = lowestBit(row);
            row &= row - 1;
            adj[newIndex[u]] |= VertexSet{1} << newIndex[v];
        }
    }
    return TargetGraph(m, std::move(adj));
}

std::vector<VertexSet> components(int n, const std::vector<VertexSet>& rows) {
    std::vector<VertexSet> out;
    VertexSet seen = 0;
    for (int v = 0; v < n; ++v) {
        if ((seen >> v) & 1) continue;
        VertexSet comp = VertexSet{1} << v;
        VertexSet frontier = comp;
        while (frontier) {
            VertexSet next = 0;
            VertexSet m = frontier;
            while (m) {
                int u = lowestBit(m);
                m &= m - 1;
                next |= rows[u];
            }
            frontier = next & ~comp;
            comp |= next;
        }
        comp |= VertexSet{1} << v;  // isolated looped vertex still its own component
        seen |= comp;
        out.push_back(comp);
    }
    return out;
}

std::vector<VertexSet> components(const SimpleGraph& g) {
    return components(g.vertexCount(), g.rows());
}

std::vector<VertexSet> components(const TargetGraph& h) {
    return components(h.vertexCount(), h.rows());
}

GraphClassification classifyGraph(int n, const std::vector<VertexSet>& rows) {
    GraphClassification c;
    auto comps = components(n, rows);
    c.isConnected = comps.size() <= 1;
    c.minDegree = n == 0 ? 0 : kMaxVertices;
    c.maxDegree = 0;
    for (int v = 0; v < n; ++v) {
        int d = popcount(rows[v]);
        c.minDegree = std::min(c.minDegree, d);
        c.maxDegree = std::max(c.maxDegree, d);
    }
    // Two-colouring; a loop is an odd closed walk, so it kills bipartiteness.
    std::vector<int> colour(n, -1);
    c.isBipartite = true;
    for (int s = 0; s < n && c.isBipartite; ++s) {
        if (colour[s] >= 0) continue;
        colour[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty() && c.isBipartite) {
            int u = stack.back();
            stack.pop_back();
            VertexSet m = rows[u];
            while (m) {
                int v = lowestBit(m);
                m &= m - 1;
                if (v == u) {
                    c.isBipartite = false;
                    break;
                }
                if (colour[v] < 0) {
                    colour[v] = 1 - colour[u];
                    stack.push_back(v);
                } else if (colour[v] == colour[u]) {
                    c.isBipartite = false;
                    break;
                }
            }
        }
    }
    return c;
}

GraphClassification classifyGraph(const SimpleGraph& g) {
    return classifyGraph(g.vertexCount(), g.rows());
}

GraphClassification classifyGraph(const TargetGraph& h) {
    return classifyGraph(h.vertexCount(), h.rows());
}

}  // namespace homcount
