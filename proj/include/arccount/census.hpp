#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>

#include "arccount/gf.hpp"
#include "arccount/qpoly.hpp"

namespace arccount {

enum class Space { P1, P2, P2Dual };

// |P^N(F_{q^k})| as a polynomial in q.
QPoly proj_space_size(Space space, std::uint32_t k);

// Number of points of the space whose Frobenius orbit has size exactly n,
// as a polynomial in q: the points of P^N(F_{q^n}) minus those already in a
// proper subextension, by Moebius-style recursion over divisors of n.
QPoly exact_degree_count(Space space, std::uint32_t n);

// Number of generic points of exact degree n in P^2, 3 <= n <= 6: points on
// no low-degree line (degree < n for odd n, < n/2 for even n).  Low-degree
// incidences happen along lines of P^2 over the base (and, for n = 6, over
// the quadratic extension, where the ambient plane is read over F_{q^2}).
QPoly generic_count(std::uint32_t n);

// The base-field misreading of the n = 6 correction term (subtracting
// degree-3-over-q line incidences instead of degree-3-over-q^2).  Kept as a
// regression target: enumeration refutes it at q = 2 (3612 vs 2856).
QPoly generic_count_deg6_naive();

struct CensusKey {
    std::uint32_t degree;
    bool generic;   // generic rows only exist for degree >= 3
    auto operator<=>(const CensusKey&) const = default;
};

using CensusTable = std::map<CensusKey, std::uint64_t>;

// Classifies every point of the space over the full ambient field of gf by
// exact degree (rows {d, false} for each divisor d of the Frobenius order)
// and, when classify_generic is set, by genericity (rows {d, true} for
// d >= 3).  Direct enumeration; the independent check of the closed forms.
CensusTable enumerate_census(const GaloisField& gf, Space space, bool classify_generic = false);

}  // namespace arccount
