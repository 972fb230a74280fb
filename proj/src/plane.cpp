#include "arccount/plane.hpp"

#include <numeric>
#include <stdexcept>

namespace arccount {

namespace {

// Normalize a raw triple: divide by the first nonzero entry.
void normalize3(const GaloisField& gf, GFElem& a, GFElem& b, GFElem& c) {
    GFElem lead = a ? a : (b ? b : c);
    if (!lead) throw std::invalid_argument("zero triple is not projective");
    if (lead != 1) {
        GFElem il = gf.inv(lead);
        a = gf.mul(a, il);
        b = gf.mul(b, il);
        c = gf.mul(c, il);
    }
}

// Cross product of two triples; zero triple iff they are proportional.
void cross3(const GaloisField& gf, GFElem x1, GFElem y1, GFElem z1, GFElem x2, GFElem y2, GFElem z2,
            GFElem& a, GFElem& b, GFElem& c) {
    a = gf.sub(gf.mul(y1, z2), gf.mul(z1, y2));
    b = gf.sub(gf.mul(z1, x2), gf.mul(x1, z2));
    c = gf.sub(gf.mul(x1, y2), gf.mul(y1, x2));
}

GFElem det3(const GaloisField& gf, const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3) {
    GFElem m1 = gf.sub(gf.mul(p2.y, p3.z), gf.mul(p2.z, p3.y));
    GFElem m2 = gf.sub(gf.mul(p2.x, p3.z), gf.mul(p2.z, p3.x));
    GFElem m3 = gf.sub(gf.mul(p2.x, p3.y), gf.mul(p2.y, p3.x));
    return gf.add(gf.sub(gf.mul(p1.x, m1), gf.mul(p1.y, m2)), gf.mul(p1.z, m3));
}

std::uint32_t lcm_u32(std::uint32_t a, std::uint32_t b) { return a / std::gcd(a, b) * b; }

std::uint32_t triple_degree(const GaloisField& gf, GFElem first, GFElem second, GFElem third) {
    // Normalized triple: leading 1 contributes degree 1.
    if (first) return lcm_u32(gf.element_degree(second), gf.element_degree(third));
    if (second) return gf.element_degree(third);
    return 1;
}

}  // namespace

ProjPoint make_point(const GaloisField& gf, GFElem x, GFElem y, GFElem z) {
    normalize3(gf, x, y, z);
    return {x, y, z};
}

ProjLine make_line(const GaloisField& gf, GFElem a, GFElem b, GFElem c) {
    normalize3(gf, a, b, c);
    return {a, b, c};
}

bool incident(const GaloisField& gf, const ProjPoint& p, const ProjLine& l) {
    return gf.add(gf.add(gf.mul(p.x, l.a), gf.mul(p.y, l.b)), gf.mul(p.z, l.c)) == 0;
}

bool collinear(const GaloisField& gf, const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3) {
    return det3(gf, p1, p2, p3) == 0;
}

bool concurrent(const GaloisField& gf, const ProjLine& l1, const ProjLine& l2, const ProjLine& l3) {
    return det3(gf, ProjPoint{l1.a, l1.b, l1.c}, ProjPoint{l2.a, l2.b, l2.c}, ProjPoint{l3.a, l3.b, l3.c}) == 0;
}

ProjLine join(const GaloisField& gf, const ProjPoint& p1, const ProjPoint& p2) {
    GFElem a, b, c;
    cross3(gf, p1.x, p1.y, p1.z, p2.x, p2.y, p2.z, a, b, c);
    if (!a && !b && !c) throw std::invalid_argument("join of equal points");
    normalize3(gf, a, b, c);
    return {a, b, c};
}

ProjPoint meet(const GaloisField& gf, const ProjLine& l1, const ProjLine& l2) {
    GFElem x, y, z;
    cross3(gf, l1.a, l1.b, l1.c, l2.a, l2.b, l2.c, x, y, z);
    if (!x && !y && !z) throw std::invalid_argument("meet of equal lines");
    normalize3(gf, x, y, z);
    return {x, y, z};
}

ProjPoint point_frobenius(const GaloisField& gf, const ProjPoint& p) {
    return {gf.frobenius(p.x), gf.frobenius(p.y), gf.frobenius(p.z)};
}

ProjLine line_frobenius(const GaloisField& gf, const ProjLine& l) {
    return {gf.frobenius(l.a), gf.frobenius(l.b), gf.frobenius(l.c)};
}

std::uint32_t point_degree(const GaloisField& gf, const ProjPoint& p) {
    return triple_degree(gf, p.x, p.y, p.z);
}

std::uint32_t line_degree(const GaloisField& gf, const ProjLine& l) {
    return triple_degree(gf, l.a, l.b, l.c);
}

std::vector<ProjPoint> point_orbit(const GaloisField& gf, const ProjPoint& p) {
    std::vector<ProjPoint> orbit{p};
    for (ProjPoint t = point_frobenius(gf, p); !(t == p); t = point_frobenius(gf, t))
        orbit.push_back(t);
    return orbit;
}

namespace {

bool degree_is_bad(std::uint32_t r, std::uint32_t n) {
    // Degree-r lines forbidden through a generic exact degree-n point.
    return (n % 2 == 0) ? r < n / 2 : r < n;
}

}  // namespace

std::optional<std::uint32_t> genericity_witness(const GaloisField& gf, const ProjPoint& p) {
    std::uint32_t n = point_degree(gf, p);
    if (n < 3) throw std::invalid_argument("genericity is defined for points of degree >= 3");
    std::optional<std::uint32_t> least;
    ProjPoint conj = p;
    for (std::uint32_t a = 1; a < n; ++a) {
        conj = point_frobenius(gf, conj);
        std::uint32_t r = line_degree(gf, join(gf, p, conj));
        if (degree_is_bad(r, n) && (!least || r < *least)) least = r;
    }
    return least;
}

bool is_generic(const GaloisField& gf, const ProjPoint& p) {
    return !genericity_witness(gf, p).has_value();
}

std::optional<std::uint32_t> genericity_witness_by_scan(const GaloisField& gf, const ProjPoint& p) {
    std::uint32_t n = point_degree(gf, p);
    if (n < 3) throw std::invalid_argument("genericity is defined for points of degree >= 3");
    std::optional<std::uint32_t> least;
    std::uint32_t L = gf.frobenius_order();
    // Every line of the ambient dual plane, tested for incidence.
    for_each_subplane_point(gf, L, [&](const ProjPoint& dual) {
        ProjLine l{dual.x, dual.y, dual.z};
        std::uint32_t r = line_degree(gf, l);
        if (degree_is_bad(r, n) && (!least || r < *least) && incident(gf, p, l)) least = r;
    });
    return least;
}

}  // namespace arccount
