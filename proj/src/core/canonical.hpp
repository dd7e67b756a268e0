#ifndef HOMCOUNT_CORE_CANONICAL_HPP
#define HOMCOUNT_CORE_CANONICAL_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "graph.hpp"

namespace homcount {

// Byte string constant on an isomorphism class (loop flags respected).
// Encodes [n][loop bits][upper triangle bits] of the canonically
// relabelled graph, so the class representative can be rebuilt from it.
class Certificate {
public:
    Certificate() = default;
    explicit Certificate(std::vector<std::uint8_t> bytes) : bytes_(std::move(bytes)) {}

    const std::vector<std::uint8_t>& bytes() const { return bytes_; }
    std::string hex() const;
    static Certificate fromHex(const std::string& hex);

    auto operator<=>(const Certificate&) const = default;

private:
    std::vector<std::uint8_t> bytes_;
};

struct CanonicalResult {
    Certificate certificate;
    // labeling[v] = position of vertex v in the canonical ordering.
    std::vector<int> labeling;
};

// Iterative colour refinement plus branch-and-bound over the minimal
// certificate string; automorphisms discovered along the way prune
// symmetric branches.
CanonicalResult canonicalizeRows(int n, const std::vector<VertexSet>& rows);

CanonicalResult canonicalize(const SimpleGraph& g);
CanonicalResult canonicalize(const TargetGraph& h);
Certificate certificateOf(const SimpleGraph& g);
Certificate certificateOf(const TargetGraph& h);
SimpleGraph canonicalForm(const SimpleGraph& g);
TargetGraph canonicalForm(const TargetGraph& h);

}  // namespace homcount

#endif
