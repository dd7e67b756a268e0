#ifndef HOMCOUNT_CORE_TYPES_HPP
#define HOMCOUNT_CORE_TYPES_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace homcount {

// Exact nonnegative count; all counting paths stay in integer arithmetic.
using BigCount = mpz_class;

// Dense bitset over vertices. Everything at desk scale fits one word.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

// Default work budget for exhaustive-enumeration routines, counted in
// assignments (maps or tuples examined).
inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

// Default vertex cap for the isomorph-free enumerator.
inline constexpr int kDefaultEnumCap = 9;

// Default vertex cap for cycle packing / feedback vertex set search.
inline constexpr int kDefaultStructureCap = 12;

struct GraphError : std::runtime_error {
    explicit GraphError(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Work budget exceeded: a refusal, deliberately distinct from a zero count.
struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// A cache or cross-check disagreed with a freshly computed value.
struct IntegrityError : std::runtime_error {
    explicit IntegrityError(const std::string& what) : std::runtime_error(what) {}
};

inline int popcount(VertexSet s) { return __builtin_popcountll(s); }

inline int lowestBit(VertexSet s) { return __builtin_ctzll(s); }

inline VertexSet fullSet(int n) {
    return n == 0 ? 0 : (n >= 64 ? ~VertexSet{0} : ((VertexSet{1} << n) - 1));
}

inline BigCount bigPow(const BigCount& base, unsigned long exp) {
    BigCount r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline BigCount bigPow(unsigned long base, unsigned long exp) {
    BigCount r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

inline BigCount factorial(unsigned long n) {
    BigCount r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline std::string toDecimal(const BigCount& v) { return v.get_str(); }

inline BigCount fromDecimal(const std::string& s) {
    if (s.empty()) throw ParseError("empty decimal string");
    for (char c : s)
        if (c < '0' || c > '9') throw ParseError("bad decimal string: " + s);
    return BigCount(s);
}

}  // namespace homcount

#endif
