#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "arccount/characters.hpp"
#include "arccount/qpoly.hpp"

namespace arccount {

// Equivariant cohomology of the quotient configuration space X_n, solved
// degree by degree from the twisted count polynomials.  For each irreducible
// chi the count data gives L_chi(q) = sum_C chi(C) p_{n,C}(q), a polynomial
// of degree 2n whose q^{2n-j} coefficient equals
//   (-1)^j (m_j - m_{j-2} + m_{j-3} - m_{j-5}),
// where m_j is the multiplicity of chi in H^j(X_n) and the shifted terms
// come from the Kunneth factor of the group PGL_3 (cohomology in degrees
// 0, 3, 5, 8 with Frobenius exponents 0, 2, 3, 5).  Solving upward in j
// determines every m_j; integrality, nonnegativity and vanishing above the
// dimension of X_n are not assumed but checked, so inconsistent input data
// (e.g. a wrong count row) is detected rather than silently absorbed.
struct CohomologySolution {
    std::uint32_t n = 0;
    // mult[j][r]: multiplicity of irrep r (partitions_of(n) order) in
    // H^j(X_n), for j = 0 .. 2(n-4).
    std::vector<std::vector<mpq_class>> mult;
    std::vector<std::string> issues;  // every violated consistency condition
    bool ok() const { return issues.empty(); }
};

// counts_by_class: one polynomial per conjugacy class, partitions_of(n)
// order.  n in {5, 6}.
CohomologySolution solve_cohomology(std::uint32_t n, const std::vector<QPoly>& counts_by_class);

// Same, with the counts taken from the derived closed forms.
CohomologySolution solve_cohomology(std::uint32_t n);

// Total dimension per degree of H^*(X_n): sum of multiplicity * dim.
std::vector<mpz_class> x_betti(const CohomologySolution& s);

// One (degree, weight) piece of H^*(F_n) = H^*(PGL_3) (x) H^*(X_n).
struct WeightedPiece {
    unsigned degree = 0;
    unsigned weight = 0;
    std::vector<mpq_class> mult;  // irrep multiplicities, table order
};

// All nonzero pieces of H^*(F_n), ordered by degree then weight.
std::vector<WeightedPiece> f_table(const CohomologySolution& s);

// Betti numbers of the unordered quotient B_n, degree 0 .. 2n: by transfer,
// dim H^i(B_n) is the multiplicity of the trivial representation in
// H^i(F_n).
std::vector<mpz_class> b_betti(const CohomologySolution& s);

// The point-count polynomial |B_n(F_q)| implied by the solution:
// sum over trivial-representation pieces of (-1)^degree q^{2n - weight}.
// Equals sum_C p_{n,C}(q) when the input counts are consistent.
QPoly untwisted_point_poly(const CohomologySolution& s);

}  // namespace arccount
