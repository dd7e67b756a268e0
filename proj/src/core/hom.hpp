#ifndef HOMCOUNT_CORE_HOM_HPP
#define HOMCOUNT_CORE_HOM_HPP

#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "canonical.hpp"
#include "graph.hpp"
#include "types.hpp"

namespace homcount {

// Matrix of exact counts; entry (i,j) of pathHomMatrix(h, r) is the number
// of homomorphisms of the r-vertex path pinning its ends to i and j.
struct HomMatrix {
    int size = 0;
    std::vector<BigCount> entries;

    const BigCount& at(int i, int j) const { return entries[i * size + j]; }
    BigCount& at(int i, int j) { return entries[i * size + j]; }
};

struct EngineOptions {
    std::uint64_t budget = kDefaultBudget;  // assignments for exhaustive paths
    bool useBipartiteClosedForm = true;
    int workers = 1;
};

// Cache of per-component counts keyed by (certificate(G piece),
// certificate(H)). Get-or-insert is atomic and inserts are idempotent:
// a re-insert with a different value aborts the run.
class MemoCache {
public:
    using Key = std::pair<std::vector<std::uint8_t>, std::vector<std::uint8_t>>;

    std::optional<BigCount> find(const Key& key) const;
    void insert(const Key& key, const BigCount& value, bool fresh = true);

    // (gHex, hHex, decimal) of entries inserted this run, sorted.
    std::vector<std::array<std::string, 3>> freshEntries() const;
    std::size_t size() const;

private:
    struct Entry {
        BigCount value;
        bool fresh = false;
    };
    mutable std::mutex mutex_;
    std::map<Key, Entry> entries_;
};

class Engine {
public:
    Engine() = default;
    explicit Engine(EngineOptions options) : options_(options) {}

    const EngineOptions& options() const { return options_; }
    EngineOptions& options() { return options_; }
    MemoCache& memo() { return memo_; }
    const MemoCache& memo() const { return memo_; }

    // Oracle: enumerate all |V(H)|^n maps and check every edge. Refuses
    // (distinct from returning 0) when the map space exceeds the budget.
    BigCount bruteForce(const SimpleGraph& g, const TargetGraph& h) const;

    // Exact count. Factors over components of G, sums over components of
    // H per connected piece, recognizes complete bipartite pieces, and
    // otherwise runs pruned backtracking over bitset candidate sets.
    BigCount count(const SimpleGraph& g, const TargetGraph& h);

    // hom(K_{a,b}, H) = sum over f in V(H)^a of |common neighbourhood|^b.
    BigCount completeBipartiteCount(int a, int b, const TargetGraph& h) const;

    // hom(G, m disjoint copies of a connected H) without materializing the
    // copies: product over pieces of m * hom(piece, H).
    BigCount disjointCopies(const SimpleGraph& g, const BigCount& copies,
                            const TargetGraph& connectedTarget);

    HomMatrix pathMatrix(const TargetGraph& h, int pathVertices) const;
    BigCount cycleCount(const TargetGraph& h, int cycleLength) const;

    BigCount qColourings(const SimpleGraph& g, int q);

private:
    BigCount countPiece(const SimpleGraph& piece,
                        const std::vector<TargetGraph>& targetComponents) const;
    BigCount backtrackCount(const SimpleGraph& piece, const TargetGraph& h) const;

    EngineOptions options_;
    MemoCache memo_;
};

// (a, b) when the connected graph is complete bipartite with classes of
// those sizes (single vertex reports (1, 0)).
std::optional<std::pair<int, int>> recognizeCompleteBipartite(const SimpleGraph& connectedPiece);

}  // namespace homcount

#endif
