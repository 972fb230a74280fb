#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "arccount/cycle_type.hpp"
#include "arccount/qpoly.hpp"

namespace arccount {

// Outcome of one twisted count: configurations of n points in the plane over
// F_q, no three collinear, carried to themselves by Frobenius acting through
// the given cycle type.  raw_tuples counts ordered choices of one orbit
// representative per cycle; dividing by the centralizer order of the class
// converts to unordered configurations with a marked matching, i.e. the
// fixed-point count of the twist.
struct TwistedCount {
    std::uint32_t n = 0;
    std::uint64_t q = 0;
    CycleType cycle_type = CycleType::identity(1);
    std::uint64_t raw_tuples = 0;
    std::uint64_t count = 0;
    std::string method;          // "brute" or "frame_fixed_brute"
    std::int64_t elapsed_ms = 0;
};

struct EnumerationOptions {
    // A-priori work gate: product over cycles of the candidate-point count
    // (closed form), compared before any enumeration starts.
    std::uint64_t budget = 100'000'000;
    int jobs = 1;
    // Overrides the enumeration order of the cycles; must be a permutation
    // of the cycle type.  The count does not depend on it (tested).
    std::vector<std::uint32_t> part_order;
    // Enumerate candidates in reverse handle order; another invariance hook.
    bool reverse = false;
};

struct BudgetExceeded : std::runtime_error {
    BudgetExceeded(std::uint64_t estimate_, std::uint64_t budget_)
        : std::runtime_error("estimated work " + std::to_string(estimate_) +
                             " exceeds budget " + std::to_string(budget_)),
          estimate(estimate_),
          budget(budget_) {}
    std::uint64_t estimate;
    std::uint64_t budget;
};

// q = p^m with p prime, or throws std::invalid_argument.
struct PrimePower {
    std::uint64_t p;
    std::uint32_t m;
};
PrimePower factor_prime_power(std::uint64_t q);

// |PGL_3(F_q)| = q^3 (q^3 - 1) (q^2 - 1).
std::uint64_t pgl3_order(std::uint64_t q);
QPoly pgl3_order_poly();

// Candidate pool size per cycle of length k: points of exact degree k for
// k <= 2, generic points of degree k for k >= 3 (non-generic representatives
// never survive the collinearity filter; see the enumerator internals).
std::uint64_t estimate_tuples(std::uint32_t n, const CycleType& c, std::uint64_t q);

// Direct backtracking count over Frobenius-orbit representatives in the
// plane over F_{q^lcm(parts)}.  Throws BudgetExceeded when estimate_tuples
// tops the option budget.
TwistedCount count_twisted(std::uint32_t n, const CycleType& c, std::uint64_t q,
                           const EnumerationOptions& opts = {});

// Rational points of the open configuration space X_n for n in {4, 5, 6}:
// ordered n-tuples of F_q-points, no three collinear, whose first four form
// the standard frame, counted by brute force over the remaining points.
std::uint64_t frame_fixed_count(std::uint32_t n, std::uint64_t q);

// Identity-class count via frame fixing: |PGL_3(F_q)| * |X_n(F_q)| / n!.
TwistedCount count_identity_via_frames(std::uint32_t n, std::uint64_t q);

// Closed forms for |X_n(F_q)|, n = 5, 6.
QPoly frame_count_poly(std::uint32_t n);

}  // namespace arccount
