#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "arccount/cycle_type.hpp"
#include "arccount/qpoly.hpp"

namespace arccount {

// A count polynomial in factored form: prefactor * prod factors[i]^e_i.
// Two sources exist for each (n, class) pair and the verification suite
// compares them: count_formula derives the row from the census polynomials
// step by step, published_formula transcribes the reference table row as
// printed.  They agree everywhere except one n = 6 row whose printed
// prefactor disagrees with both the derivation and direct enumeration.
struct CountFormula {
    std::uint32_t n = 0;
    CycleType cycle_type = CycleType::identity(1);
    mpq_class prefactor = 1;
    std::vector<std::pair<QPoly, unsigned>> factors;  // (base, exponent)

    QPoly body() const;      // product of the factors
    QPoly expanded() const;  // prefactor * body
    std::string display() const;
};

// Derived closed form for the twisted count of n noncollinear points, built
// from orbit-pool polynomials and stepwise incidence counts; the prefactor
// is 1 / |centralizer of the class|.  n in {5, 6}, any class of S_n.
CountFormula count_formula(std::uint32_t n, const CycleType& c);

// The corresponding row of the published reference tables, exactly as
// printed there (including the one prefactor this project flags as wrong).
CountFormula published_formula(std::uint32_t n, const CycleType& c);

}  // namespace arccount
