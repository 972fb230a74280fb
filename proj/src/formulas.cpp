#include "arccount/formulas.hpp"

#include <stdexcept>

#include "arccount/census.hpp"
#include "arccount/twisted.hpp"

namespace arccount {

namespace {

QPoly P(std::initializer_list<long> coeffs) { return QPoly::of(coeffs); }
QPoly qpow(unsigned e) { return QPoly::monomial(e); }

using Factors = std::vector<std::pair<QPoly, unsigned>>;

CountFormula make(std::uint32_t n, const CycleType& c, const mpq_class& pre, Factors f) {
    CountFormula out;
    out.n = n;
    out.cycle_type = c;
    out.prefactor = pre;
    out.factors = std::move(f);
    return out;
}

// Derived rows.  Each factor is one step of the count: pick the orbits from
// the plane census pools, then extend one rational point at a time, the
// factor being the number of points off the forbidden lines accumulated so
// far.  Divide by the centralizer order to pass from ordered orbit choices
// to configurations.
CountFormula derived(std::uint32_t n, const CycleType& c) {
    const mpq_class pre(1, static_cast<unsigned long>(c.centralizer_order()));
    const QPoly plane = P({1, 1, 1});           // q^2 + q + 1 rational points
    const QPoly deg2 = exact_degree_count(Space::P2, 2);            // q^4 - q
    const QPoly deg2_off_line = deg2 - exact_degree_count(Space::P1, 2);  // q^4 - q^2
    const auto& parts = c.parts_string();

    if (n == 5) {
        if (parts == "1,1,1,1,1")
            return make(n, c, pre, {{pgl3_order_poly(), 1}, {frame_count_poly(5), 1}});
        if (parts == "2,1,1,1")
            // conjugate pair, then three rational points dodging the joins
            return make(n, c, pre,
                        {{deg2, 1}, {qpow(2), 1}, {P({-1, 0, 1}), 1}, {P({0, -1, 1}), 1}});
        if (parts == "2,2,1")
            // second pair off the first pair's line; the rational point off
            // both orbit lines and their intersection
            return make(n, c, pre, {{deg2, 1}, {deg2_off_line, 1}, {P({-2, -1, 1}), 1}});
        if (parts == "3,1,1")
            // a generic cubic orbit's joins carry no rational points, so the
            // first point is free and the second only avoids the first
            return make(n, c, pre, {{generic_count(3), 1}, {plane, 1}, {P({0, 1, 1}), 1}});
        if (parts == "3,2")
            return make(n, c, pre, {{generic_count(3), 1}, {deg2, 1}});
        if (parts == "4,1")
            // the two diagonals of a generic quartic orbit meet in the one
            // forbidden rational point
            return make(n, c, pre, {{generic_count(4), 1}, {P({0, 1, 1}), 1}});
        if (parts == "5")
            return make(n, c, pre, {{generic_count(5), 1}});
    }
    if (n == 6) {
        if (parts == "1,1,1,1,1,1")
            return make(n, c, pre, {{pgl3_order_poly(), 1}, {frame_count_poly(6), 1}});
        if (parts == "2,1,1,1,1")
            return make(n, c, pre,
                        {{deg2, 1},
                         {qpow(2), 1},
                         {P({-1, 0, 1}), 1},
                         {P({0, -1, 1}), 1},
                         {P({3, -3, 1}), 1}});
        if (parts == "2,2,1,1")
            return make(n, c, pre,
                        {{deg2, 1}, {deg2_off_line, 1}, {P({-2, -1, 1}), 1}, {P({-3, -1, 1}), 1}});
        if (parts == "2,2,2")
            // third conjugate pair off the lines spanned by the first two
            return make(n, c, pre,
                        {{deg2, 1}, {deg2_off_line, 1}, {P({8, 1, -6, 0, 1}), 1}});
        if (parts == "3,1,1,1")
            return make(n, c, pre,
                        {{generic_count(3), 1}, {plane, 1}, {P({0, 1, 1}), 1}, {qpow(2), 1}});
        if (parts == "3,2,1")
            return make(n, c, pre, {{generic_count(3), 1}, {deg2, 1}, {qpow(2), 1}});
        if (parts == "3,3")
            // second cubic orbit avoids its own orbit's representatives and
            // the orbits meeting the first one badly: 6q^3 - 6q^2 - 6q - 9
            // representatives in all (the stepwise account in the reference
            // prints two of these signs differently; see the errata report)
            return make(n, c, pre,
                        {{generic_count(3), 1},
                         {generic_count(3) - P({-9, -6, -6, 6}), 1}});
        if (parts == "4,1,1")
            return make(n, c, pre,
                        {{generic_count(4), 1}, {P({0, 1, 1}), 1}, {P({-1, 1, 1}), 1}});
        if (parts == "4,2")
            return make(n, c, pre, {{generic_count(4), 1}, {P({-2, -1, -2, 0, 1}), 1}});
        if (parts == "5,1")
            return make(n, c, pre, {{generic_count(5), 1}, {plane, 1}});
        if (parts == "6")
            return make(n, c, pre, {{generic_count(6), 1}});
    }
    throw std::invalid_argument("no count formula for n=" + std::to_string(n) + " class " +
                                c.cycle_notation());
}

// The reference table rows as printed: linear-factor bodies and the printed
// prefactor.  One prefactor (n = 6, class (12)(34)) is reproduced as printed
// even though it fails both the derivation and direct enumeration.
CountFormula published(std::uint32_t n, const CycleType& c) {
    const auto& parts = c.parts_string();
    const QPoly qm3 = P({-3, 1}), qm2 = P({-2, 1}), qm1 = P({-1, 1}), qp1 = P({1, 1});
    const QPoly s = P({1, 1, 1});  // q^2 + q + 1

    if (n == 5) {
        if (parts == "1,1,1,1,1")
            return make(n, c, mpq_class(1, 120),
                        {{qm3, 1}, {qm2, 1}, {qm1, 2}, {qpow(3), 1}, {qp1, 1}, {s, 1}});
        if (parts == "2,1,1,1")
            return make(n, c, mpq_class(1, 12), {{qm1, 3}, {qpow(4), 1}, {qp1, 1}, {s, 1}});
        if (parts == "2,2,1")
            return make(n, c, mpq_class(1, 8),
                        {{qm2, 1}, {qm1, 2}, {qpow(3), 1}, {qp1, 2}, {s, 1}});
        if (parts == "3,1,1")
            return make(n, c, mpq_class(1, 6), {{qm1, 2}, {qpow(4), 1}, {qp1, 2}, {s, 1}});
        if (parts == "3,2")
            return make(n, c, mpq_class(1, 6), {{qm1, 3}, {qpow(4), 1}, {qp1, 1}, {s, 1}});
        if (parts == "4,1")
            return make(n, c, mpq_class(1, 4), {{qm1, 2}, {qpow(4), 1}, {qp1, 2}, {s, 1}});
        if (parts == "5")
            return make(n, c, mpq_class(1, 5),
                        {{qm1, 2}, {qpow(3), 1}, {qp1, 1}, {P({1, 0, 1}), 1}, {s, 1}});
    }
    if (n == 6) {
        if (parts == "1,1,1,1,1,1")
            return make(n, c, mpq_class(1, 720),
                        {{qm3, 1},
                         {qm2, 1},
                         {qm1, 2},
                         {qpow(3), 1},
                         {qp1, 1},
                         {s, 1},
                         {P({21, -9, 1}), 1}});
        if (parts == "2,1,1,1,1")
            return make(n, c, mpq_class(1, 48),
                        {{qm1, 3}, {qpow(4), 1}, {qp1, 1}, {s, 1}, {P({3, -3, 1}), 1}});
        if (parts == "2,2,1,1")  // printed prefactor; the flagged row
            return make(n, c, mpq_class(1, 6),
                        {{qm2, 1}, {qm1, 2}, {qpow(3), 1}, {qp1, 2}, {s, 1}, {P({-3, -1, 1}), 1}});
        if (parts == "2,2,2")
            return make(n, c, mpq_class(1, 48),
                        {{qm1, 2}, {qpow(3), 1}, {qp1, 1}, {s, 1}, {P({8, 1, -6, 0, 1}), 1}});
        if (parts == "3,1,1,1")
            return make(n, c, mpq_class(1, 18), {{qm1, 2}, {qpow(6), 1}, {qp1, 2}, {s, 1}});
        if (parts == "3,2,1")
            return make(n, c, mpq_class(1, 6), {{qm1, 3}, {qpow(6), 1}, {qp1, 1}, {s, 1}});
        if (parts == "3,3")
            return make(n, c, mpq_class(1, 18),
                        {{qm1, 2}, {qpow(3), 1}, {qp1, 1}, {s, 1}, {P({9, -3, 0, -2, 1}), 1}});
        if (parts == "4,1,1")
            return make(n, c, mpq_class(1, 8),
                        {{qm1, 2}, {qpow(4), 1}, {qp1, 2}, {s, 1}, {P({-1, 1, 1}), 1}});
        if (parts == "4,2")
            return make(n, c, mpq_class(1, 8),
                        {{qm1, 2}, {qpow(3), 1}, {qp1, 1}, {s, 1}, {P({-2, -1, -2, 0, 1}), 1}});
        if (parts == "5,1")
            return make(n, c, mpq_class(1, 5),
                        {{qm1, 2}, {qpow(3), 1}, {qp1, 1}, {P({1, 0, 1}), 1}, {s, 2}});
        if (parts == "6")
            return make(n, c, mpq_class(1, 6),
                        {{qm1, 2}, {qpow(3), 1}, {qp1, 1}, {s, 1}, {P({-1, 1, 0, 0, 1}), 1}});
    }
    throw std::invalid_argument("no published row for n=" + std::to_string(n) + " class " +
                                c.cycle_notation());
}

}  // namespace

QPoly CountFormula::body() const {
    QPoly out(1);
    for (const auto& [base, e] : factors) out *= base.pow(e);
    return out;
}

QPoly CountFormula::expanded() const { return body().scaled(prefactor); }

std::string CountFormula::display() const {
    std::string out;
    if (prefactor != 1) {
        out += prefactor.get_str();
        out += " * ";
    }
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) out += " ";
        out += "(" + factors[i].first.str() + ")";
        if (factors[i].second > 1) out += "^" + std::to_string(factors[i].second);
    }
    return out;
}

CountFormula count_formula(std::uint32_t n, const CycleType& c) {
    if (c.n() != n) throw std::invalid_argument("cycle type is not a partition of n");
    return derived(n, c);
}

CountFormula published_formula(std::uint32_t n, const CycleType& c) {
    if (c.n() != n) throw std::invalid_argument("cycle type is not a partition of n");
    return published(n, c);
}

}  // namespace arccount
