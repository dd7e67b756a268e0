#ifndef HOMCOUNT_CORE_GRAPH_HPP
#define HOMCOUNT_CORE_GRAPH_HPP

#include <utility>
#include <vector>

#include "types.hpp"

namespace homcount {

// Simple, loopless, undirected graph. Immutable after construction; the
// adjacency is a symmetric irreflexive relation stored as one neighbour
// bitset per vertex.
class SimpleGraph {
public:
    SimpleGraph() = default;

    static SimpleGraph fromEdges(int n, const std::vector<std::pair<int, int>>& edges);
    static SimpleGraph completeBipartite(int a, int b);
    static SimpleGraph complete(int n);
    static SimpleGraph path(int n);
    static SimpleGraph cycle(int n);
    // Complete t-partite Turan graph on x vertices, classes as equal as
    // possible, ordered largest-first with vertices numbered consecutively.
    static SimpleGraph turan(int t, int x);
    // Turan graph with a perfect matching removed between two equally sized
    // classes (the i-th vertex of one matched to the i-th of the other).
    static SimpleGraph turanMinusMatching(int t, int x, int classA, int classB);
    static SimpleGraph disjointUnion(const SimpleGraph& g, const SimpleGraph& h);

    int vertexCount() const { return n_; }
    int edgeCount() const;
    bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1; }
    VertexSet neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return popcount(adj_[v]); }
    const std::vector<VertexSet>& rows() const { return adj_; }
    std::vector<std::pair<int, int>> edges() const;

    SimpleGraph permuted(const std::vector<int>& perm) const;
    SimpleGraph inducedSubgraph(VertexSet keep) const;

    bool operator==(const SimpleGraph& other) const {
        return n_ == other.n_ && adj_ == other.adj_;
    }

    // Class sizes of turan(t, x), largest first.
    static std::vector<int> turanClassSizes(int t, int x);

private:
    SimpleGraph(int n, std::vector<VertexSet> adj) : n_(n), adj_(std::move(adj)) {}

    int n_ = 0;
    std::vector<VertexSet> adj_;
};

// Target graph: undirected, loops permitted. A loop is the diagonal bit of
// the vertex's neighbour set, so degree(v) = popcount(row) counts a loop
// exactly once.
class TargetGraph {
public:
    TargetGraph() = default;

    static TargetGraph fromParts(int n, const std::vector<int>& loops,
                                 const std::vector<std::pair<int, int>>& edges);
    static TargetGraph fromSimple(const SimpleGraph& g);
    static TargetGraph completeLooped(int k);
    static TargetGraph balancedBiclique(int k);  // K_{k,k}
    static TargetGraph completeSimple(int q);    // K_q
    static TargetGraph disjointCopies(int m, const TargetGraph& base);
    static TargetGraph disjointUnion(const TargetGraph& g, const TargetGraph& h);

    int vertexCount() const { return n_; }
    bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1; }
    bool looped(int v) const { return (adj_[v] >> v) & 1; }
    VertexSet neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return popcount(adj_[v]); }
    int maxDegree() const;
    const std::vector<VertexSet>& rows() const { return adj_; }
    std::vector<int> loops() const;
    std::vector<std::pair<int, int>> edges() const;  // proper edges, u < v

    TargetGraph permuted(const std::vector<int>& perm) const;
    TargetGraph inducedSubgraph(VertexSet keep) const;

    bool operator==(const TargetGraph& other) const {
        return n_ == other.n_ && adj_ == other.adj_;
    }

private:
    TargetGraph(int n, std::vector<VertexSet> adj) : n_(n), adj_(std::move(adj)) {}

    int n_ = 0;
    std::vector<VertexSet> adj_;
};

struct GraphClassification {
    bool isConnected = false;
    bool isBipartite = false;
    int minDegree = 0;
    int maxDegree = 0;
};

// Connected components as vertex sets, ordered by smallest contained vertex.
std::vector<VertexSet> components(int n, const std::vector<VertexSet>& rows);
std::vector<VertexSet> components(const SimpleGraph& g);
std::vector<VertexSet> components(const TargetGraph& h);

GraphClassification classifyGraph(int n, const std::vector<VertexSet>& rows);
GraphClassification classifyGraph(const SimpleGraph& g);
GraphClassification classifyGraph(const TargetGraph& h);

}  // namespace homcount

#endif
