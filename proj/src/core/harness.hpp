#ifndef HOMCOUNT_CORE_HARNESS_HPP
#define HOMCOUNT_CORE_HARNESS_HPP

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "enumerate.hpp"
#include "hom.hpp"
#include "structure.hpp"

namespace homcount {

// Result of an exhaustive argmax scan over an enumerated graph class.
// Ties are reported in full; nothing is broken silently.
struct ExtremalReport {
    EnumSpec spec;
    nlohmann::json target;
    std::uint64_t scanned = 0;
    BigCount maxCount = 0;
    std::vector<Certificate> maximizers;  // sorted
    bool kDeltaInClass = false;
    bool kDeltaAttains = false;
    bool kDeltaUnique = false;
    std::uint64_t recounted = 0;

    nlohmann::json toJson() const;
    std::string toCsv() const;
};

// Outcome of one lemma/theorem sweep; pass iff no violation was recorded.
struct LemmaSweepReport {
    std::string lemma;
    nlohmann::json parameters;
    nlohmann::json details;
    std::vector<nlohmann::json> violations;
    bool pass = false;

    nlohmann::json toJson() const;
    std::string toCsv() const;
};

// The three-term maximum bound in directly comparable form. Fractional
// exponents are settled by raising both sides to the denominator; no
// floating point anywhere.
struct TermComparison {
    std::string name;
    BigCount base = 0;
    int exponentNum = 1;
    int exponentDen = 1;
    BigCount lhsPower = 0;
    BigCount termPower = 0;
    int relation = 0;  // sign of lhsPower - termPower
};

struct ConjectureComparison {
    int n = 0;
    int delta = 0;
    nlohmann::json target;
    nlohmann::json lhsGraph;
    BigCount lhs = 0;
    std::array<TermComparison, 3> terms;
    bool boundHolds = false;

    nlohmann::json toJson() const;
    std::string toCsv() const;
};

// Target of a conjecture check: either a materialized graph or k disjoint
// copies of a connected base with k a big count.
struct CopiesTarget {
    BigCount copies;
    TargetGraph base;
};
using ConjectureTarget = std::variant<TargetGraph, CopiesTarget>;

ExtremalReport scanExtremal(Engine& engine, const EnumSpec& spec, const TargetGraph& h);

// Pinned-endpoint path counts against (k^2-1)k^{r-4} over every connected
// target with at most maxTargetVertices vertices that is eligible for the
// bound; forceIncluded targets are swept regardless of eligibility and
// their violations reported separately.
LemmaSweepReport checkPathLemma(Engine& engine, int maxTargetVertices, int rMax,
                                const std::vector<TargetGraph>& forceIncluded = {});

ConjectureComparison checkConjecture(Engine& engine, const SimpleGraph& g, int delta,
                                     const ConjectureTarget& target);

// Least copy count k in [1, kMax] whose comparison verdict is "violated",
// if any.
std::optional<BigCount> minimalViolatingCopies(Engine& engine, const SimpleGraph& g,
                                               int delta, const TargetGraph& base,
                                               const BigCount& kMax);

LemmaSweepReport checkTheorem31(Engine& engine, int t, int alpha, int m,
                                const BigCount& k);

LemmaSweepReport checkTPrimeFactor(Engine& engine);

LemmaSweepReport checkLemma42(Engine& engine, int delta, const TargetGraph& h,
                              int nMin, int nMax);

LemmaSweepReport checkClosedForms(Engine& engine, int samples, std::uint64_t seed);

LemmaSweepReport checkProp41(Engine& engine, int maxN);

// All connected targets with loops on at most maxVertices vertices, up to
// isomorphism, sorted by certificate.
std::vector<TargetGraph> connectedTargetsUpTo(int maxVertices);

// Violations of the pinned path bound for one target over r in [4, rMax].
std::vector<nlohmann::json> pathLemmaViolations(Engine& engine, const TargetGraph& h,
                                                int rMax);

}  // namespace homcount

#endif
