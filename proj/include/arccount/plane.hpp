#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "arccount/gf.hpp"

namespace arccount {

// Point of P^2 over the ambient field, in normalized homogeneous form: the
// first nonzero coordinate equals 1.  Equality of structs is equality of
// points.  A line is the same data read as the coefficients of a linear form
// a*x + b*y + c*z, normalized the same way.
struct ProjPoint {
    GFElem x = 0, y = 0, z = 0;
    bool operator==(const ProjPoint&) const = default;
};

struct ProjLine {
    GFElem a = 0, b = 0, c = 0;
    bool operator==(const ProjLine&) const = default;
};

// Normalizes (x:y:z); throws std::invalid_argument on the zero triple.
ProjPoint make_point(const GaloisField& gf, GFElem x, GFElem y, GFElem z);
ProjLine make_line(const GaloisField& gf, GFElem a, GFElem b, GFElem c);

bool incident(const GaloisField& gf, const ProjPoint& p, const ProjLine& l);

// det of the 3x3 coordinate matrix vanishes.
bool collinear(const GaloisField& gf, const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3);
bool concurrent(const GaloisField& gf, const ProjLine& l1, const ProjLine& l2, const ProjLine& l3);

// Unique line through two distinct points / point on two distinct lines
// (cross product).  Throws std::invalid_argument on equal arguments.
ProjLine join(const GaloisField& gf, const ProjPoint& p1, const ProjPoint& p2);
ProjPoint meet(const GaloisField& gf, const ProjLine& l1, const ProjLine& l2);

// Coordinatewise x -> x^q.  Preserves normalization, so no renormalization
// happens and orbits stay in canonical form.
ProjPoint point_frobenius(const GaloisField& gf, const ProjPoint& p);
ProjLine line_frobenius(const GaloisField& gf, const ProjLine& l);

// Size of the Frobenius orbit = least k >= 1 fixing the point, which for a
// normalized point is the lcm of the coordinate degrees.  A point with orbit
// size k is an "exact degree k" point: it lives in P^2(F_{q^k}) and no
// smaller plane over an intermediate field.
std::uint32_t point_degree(const GaloisField& gf, const ProjPoint& p);
std::uint32_t line_degree(const GaloisField& gf, const ProjLine& l);

// The full orbit p, f(p), ..., f^{k-1}(p).
std::vector<ProjPoint> point_orbit(const GaloisField& gf, const ProjPoint& p);

// A point of exact degree n >= 3 is generic when it lies on no line of exact
// degree r with r < n (n odd) resp. r < n/2 (n even).  Any such low-degree
// line through p necessarily joins p to one of its conjugates, so it is
// enough to inspect the n-1 joins <p, f^a(p)>.  Returns the least witness r,
// or nullopt when generic.
std::optional<std::uint32_t> genericity_witness(const GaloisField& gf, const ProjPoint& p);
bool is_generic(const GaloisField& gf, const ProjPoint& p);

// Cross-check oracle for the above: tests p against every line of the plane
// of exact degree below the bound.  Enumerates the whole dual plane; only
// sensible for small ambient fields.
std::optional<std::uint32_t> genericity_witness_by_scan(const GaloisField& gf, const ProjPoint& p);

// Visits every point of P^2(F_{q^k}) inside the ambient plane, normalized,
// in a fixed deterministic order ([0:0:1], then [0:1:z], then [1:y:z] with
// y, z running through the subfield in handle order).  k must divide the
// ambient Frobenius order.
template <typename Fn>
void for_each_subplane_point(const GaloisField& gf, std::uint32_t k, Fn&& fn) {
    const std::vector<GFElem> s = gf.subfield(k);
    fn(ProjPoint{0, 0, 1});
    for (GFElem z : s) fn(ProjPoint{0, 1, z});
    for (GFElem y : s)
        for (GFElem z : s) fn(ProjPoint{1, y, z});
}

}  // namespace arccount
