#ifndef HOMCOUNT_CORE_STRUCTURE_HPP
#define HOMCOUNT_CORE_STRUCTURE_HPP

#include <optional>
#include <vector>

#include "graph.hpp"
#include "types.hpp"

namespace homcount {

// Ordered delta-tuples of target vertices whose common neighbourhood has
// the maximum possible size k = max degree of H.
struct SProfile {
    int delta = 0;
    int k = 0;
    BigCount sValue = 0;
    std::vector<std::vector<int>> witnesses;  // filled only on request
};

SProfile sValue(int delta, const TargetGraph& h,
                std::uint64_t budget = kDefaultBudget, bool collectWitnesses = false);

struct TargetClassification {
    int k = 0;
    bool isCompleteLoopedK = false;
    bool isBalancedBicliqueK = false;
    // No component is the complete looped graph on k vertices or K_{k,k}
    // at the global k.
    bool inFamilyHk = false;
};

TargetClassification classifyTarget(const TargetGraph& h);

struct CyclePacking {
    bool found = false;
    std::vector<VertexSet> cycles;  // witness, d disjoint vertex sets
};

// True iff d vertex-disjoint cycles exist; exhaustive over chordless
// cycles, shortest first.
CyclePacking hasDisjointCycles(const SimpleGraph& g, int d,
                               int cap = kDefaultStructureCap);

// A minimum-size vertex set whose removal leaves a forest; exhaustive over
// subsets by increasing size, first hit in numeric order.
VertexSet minFeedbackVertexSet(const SimpleGraph& g, int cap = kDefaultStructureCap);

// Least k with (t!k)^{t*alpha+1} > t^{t*alpha*(t*alpha+1)} * k^{t*alpha},
// the copy-count threshold of the Turan counterexample construction.
BigCount computeK0(int t, int alpha);

// The threshold predicate above, exposed so callers can verify minimality.
bool k0Holds(int t, int alpha, const BigCount& k);

}  // namespace homcount

#endif
