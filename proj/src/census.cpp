#include "arccount/census.hpp"

#include "arccount/plane.hpp"

namespace arccount {

QPoly proj_space_size(Space space, std::uint32_t k) {
    unsigned dim = (space == Space::P1) ? 1 : 2;
    QPoly s;
    for (unsigned i = 0; i <= dim; ++i) s += QPoly::monomial(i * k);
    return s;
}

QPoly exact_degree_count(Space space, std::uint32_t n) {
    if (n == 0) throw std::invalid_argument("degree must be positive");
    QPoly r = proj_space_size(space, n);
    for (std::uint32_t d = 1; d < n; ++d)
        if (n % d == 0) r -= exact_degree_count(space, d);
    return r;
}

QPoly generic_count(std::uint32_t n) {
    if (n < 3 || n > 6) throw std::invalid_argument("generic counts cover degrees 3..6");
    QPoly plane_lines = proj_space_size(Space::P2, 1);  // |P^2(F_q)| = # base lines
    QPoly r = exact_degree_count(Space::P2, n) - plane_lines * exact_degree_count(Space::P1, n);
    if (n == 6) {
        // For n = 6 the bad degrees are 1 and 2.  Degree-1 incidences were
        // subtracted above.  Degree-2 lines: q^4 - q of them; each is a P^1
        // over F_{q^2}, and a plane point of degree 6 over q on it has degree
        // 3 over q^2, so each such line carries (q^2)^3 - q^2 of them.  A
        // degree-6 point lies on at most one low-degree line (two would meet
        // it in a point of degree <= 2), so the subtractions are disjoint.
        QPoly deg2_lines = exact_degree_count(Space::P2Dual, 2);
        QPoly deg6_on_line = QPoly::monomial(6) - QPoly::monomial(2);
        r -= deg2_lines * deg6_on_line;
    }
    return r;
}

QPoly generic_count_deg6_naive() {
    QPoly plane_lines = proj_space_size(Space::P2, 1);
    return exact_degree_count(Space::P2, 6) - plane_lines * exact_degree_count(Space::P1, 6) -
           exact_degree_count(Space::P2Dual, 2) * (exact_degree_count(Space::P1, 3));
}

CensusTable enumerate_census(const GaloisField& gf, Space space, bool classify_generic) {
    CensusTable table;
    const std::uint32_t L = gf.frobenius_order();
    for (std::uint32_t d = 1; d <= L; ++d)
        if (L % d == 0) {
            table[{d, false}] = 0;
            if (classify_generic && d >= 3) table[{d, true}] = 0;
        }

    auto tally_p2 = [&](const ProjPoint& p) {
        std::uint32_t d = point_degree(gf, p);
        ++table[{d, false}];
        if (classify_generic && d >= 3 && is_generic(gf, p)) ++table[{d, true}];
    };

    switch (space) {
        case Space::P2:
        case Space::P2Dual:
            // Lines are coordinate triples too; the dual census is the same
            // loop read through make_line, kept separate on purpose so the
            // self-duality of the counts is an observable fact, not an alias.
            for_each_subplane_point(gf, L, tally_p2);
            break;
        case Space::P1: {
            const std::vector<GFElem> s = gf.subfield(L);
            auto tally_p1 = [&](GFElem u, GFElem v) {
                std::uint32_t d = u ? gf.element_degree(v) : 1;
                ++table[{d, false}];
            };
            tally_p1(0, 1);
            for (GFElem v : s) tally_p1(1, v);
            break;
        }
    }
    return table;
}

}  // namespace arccount
