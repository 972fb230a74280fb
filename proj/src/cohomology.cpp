#include "arccount/cohomology.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <utility>

#include "arccount/cycle_type.hpp"
#include "arccount/formulas.hpp"

namespace arccount {

namespace {

// (degree, Frobenius exponent) of the generators of H^*(PGL_3)
constexpr std::array<std::pair<unsigned, unsigned>, 4> kPglPieces = {
    {{0, 0}, {3, 2}, {5, 3}, {8, 5}}};

std::string ordinal(std::uint32_t j) { return "degree " + std::to_string(j); }

}  // namespace

CohomologySolution solve_cohomology(std::uint32_t n, const std::vector<QPoly>& counts_by_class) {
    if (n != 5 && n != 6) throw std::invalid_argument("cohomology solver covers n = 5, 6");
    CharacterTable table(n);
    if (counts_by_class.size() != table.size())
        throw std::invalid_argument("need one count polynomial per conjugacy class");

    CohomologySolution out;
    out.n = n;
    const unsigned D = 2 * n;           // degree of every count polynomial
    const unsigned jmax = 2 * (n - 4);  // complex dimension of X_n

    out.mult.assign(jmax + 1, std::vector<mpq_class>(table.size(), 0));

    for (std::size_t r = 0; r < table.size(); ++r) {
        QPoly L;
        for (std::size_t c = 0; c < table.size(); ++c)
            L += counts_by_class[c].scaled(mpq_class(static_cast<long>(table.value(r, c))));

        const std::string name = irrep_display_name(table.irrep(r));
        if (L.degree() > int(D))
            out.issues.push_back("L_" + name + " exceeds degree " + std::to_string(D));
        if (!L.has_integer_coeffs())
            out.issues.push_back("L_" + name + " has non-integer coefficients");

        // m_j = (-1)^j a_j + m_{j-2} - m_{j-3} + m_{j-5}, a_j the q^{D-j} coefficient
        std::vector<mpq_class> m(D + 1, 0);
        auto prev = [&](unsigned j, unsigned back) -> mpq_class {
            return back > j ? mpq_class(0) : m[j - back];
        };
        for (unsigned j = 0; j <= D; ++j) {
            mpq_class a = L.coeff(D - j);
            m[j] = (j % 2 ? -a : a) + prev(j, 2) - prev(j, 3) + prev(j, 5);
            if (m[j].get_den() != 1)
                out.issues.push_back("multiplicity of " + name + " in " + ordinal(j) +
                                     " is not an integer");
            else if (m[j] < 0)
                out.issues.push_back("multiplicity of " + name + " in " + ordinal(j) +
                                     " is negative");
            else if (j > jmax && m[j] != 0)
                out.issues.push_back("multiplicity of " + name + " in " + ordinal(j) +
                                     " should vanish above the dimension of the space");
            if (j <= jmax) out.mult[j][r] = m[j];
        }
    }
    return out;
}

CohomologySolution solve_cohomology(std::uint32_t n) {
    std::vector<QPoly> counts;
    for (const auto& c : partitions_of(n)) counts.push_back(count_formula(n, c).expanded());
    return solve_cohomology(n, counts);
}

std::vector<mpz_class> x_betti(const CohomologySolution& s) {
    CharacterTable table(s.n);
    std::vector<mpz_class> out;
    for (const auto& row : s.mult) {
        mpq_class dim = 0;
        for (std::size_t r = 0; r < table.size(); ++r)
            dim += row[r] * mpq_class(static_cast<long>(table.dimension(r)));
        if (dim.get_den() != 1) throw std::logic_error("fractional total dimension");
        out.push_back(dim.get_num());
    }
    return out;
}

std::vector<WeightedPiece> f_table(const CohomologySolution& s) {
    std::vector<WeightedPiece> out;
    for (unsigned j = 0; j < s.mult.size(); ++j) {
        bool nonzero = false;
        for (const auto& v : s.mult[j]) nonzero = nonzero || v != 0;
        if (!nonzero) continue;
        for (auto [di, dw] : kPglPieces)
            out.push_back(WeightedPiece{j + di, j + dw, s.mult[j]});
    }
    std::sort(out.begin(), out.end(), [](const WeightedPiece& a, const WeightedPiece& b) {
        return std::pair(a.degree, a.weight) < std::pair(b.degree, b.weight);
    });
    return out;
}

std::vector<mpz_class> b_betti(const CohomologySolution& s) {
    CharacterTable table(s.n);
    const std::size_t trivial_row = table.index_of(CycleType({s.n}));
    std::vector<mpz_class> out(2 * s.n + 1, 0);
    for (const auto& piece : f_table(s)) {
        const mpq_class& m = piece.mult[trivial_row];
        if (m.get_den() != 1) throw std::logic_error("fractional trivial multiplicity");
        out[piece.degree] += m.get_num();
    }
    return out;
}

QPoly untwisted_point_poly(const CohomologySolution& s) {
    CharacterTable table(s.n);
    const std::size_t trivial_row = table.index_of(CycleType({s.n}));
    QPoly out;
    for (const auto& piece : f_table(s)) {
        mpq_class m = piece.mult[trivial_row];
        if (piece.degree % 2) m = -m;
        out += QPoly::monomial(2 * s.n - piece.weight, m);
    }
    return out;
}

}  // namespace arccount
