#ifndef HOMCOUNT_CORE_ENUMERATE_HPP
#define HOMCOUNT_CORE_ENUMERATE_HPP

#include <string>
#include <vector>

#include "canonical.hpp"
#include "graph.hpp"

namespace homcount {

struct EnumSpec {
    int n = 0;
    int minDegree = 0;
    bool connectedOnly = false;
    // Optional hex prefix filter on the canonical certificate, for
    // sharding; shards over a disjoint prefix cover union to the full
    // stream.
    std::string shardPrefix;
    int cap = kDefaultEnumCap;
};

struct EnumeratedGraph {
    Certificate certificate;
    SimpleGraph graph;  // canonical form
};

// Exactly one representative per isomorphism class meeting the spec,
// sorted by certificate. Generation is by canonical augmentation: a new
// vertex is attached to each neighbourhood subset and the extension is
// kept only when deleting the canonically-last vertex leads back to the
// generating graph. Branches where some vertex can no longer reach the
// minimum degree are abandoned early.
std::vector<EnumeratedGraph> enumerateGraphs(const EnumSpec& spec);

std::uint64_t countClasses(const EnumSpec& spec);

}  // namespace homcount

#endif
