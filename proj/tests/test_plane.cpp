#include "arccount/plane.hpp"

#include <random>
#include <set>
#include <tuple>
#include <vector>

#include "doctest.h"

using namespace arccount;

namespace {

ProjPoint random_point(const GaloisField& gf, std::mt19937& rng) {
    std::uniform_int_distribution<GFElem> pick(0, gf.size() - 1);
    for (;;) {
        GFElem x = pick(rng), y = pick(rng), z = pick(rng);
        if (x || y || z) return make_point(gf, x, y, z);
    }
}

std::size_t plane_size(const GaloisField& gf) {
    std::size_t n = 0;
    for_each_subplane_point(gf, gf.frobenius_order(), [&](const ProjPoint&) { ++n; });
    return n;
}

}  // namespace

TEST_CASE("normalization fixes a unique representative") {
    GaloisField gf(5, 1);
    CHECK(make_point(gf, 2, 4, 1) == make_point(gf, 4, 3, 2));  // scaled by 2
    CHECK(make_point(gf, 0, 3, 2) == make_point(gf, 0, 1, 4));
    CHECK(make_point(gf, 0, 0, 2).z == 1);
    CHECK_THROWS_AS(make_point(gf, 0, 0, 0), std::invalid_argument);
    ProjPoint p = make_point(gf, 3, 1, 4);
    CHECK(p.x == 1);
}

TEST_CASE("incidence, join and meet in the Fano plane") {
    GaloisField gf(2, 1);
    ProjPoint e1{1, 0, 0}, e2{0, 1, 0}, e3{0, 0, 1}, u{1, 1, 1};
    ProjLine z = join(gf, e1, e2);
    CHECK(z == ProjLine{0, 0, 1});
    CHECK(incident(gf, e1, z));
    CHECK(incident(gf, e2, z));
    CHECK(!incident(gf, e3, z));
    CHECK(!incident(gf, u, z));
    CHECK(collinear(gf, e1, e2, make_point(gf, 1, 1, 0)));
    CHECK(!collinear(gf, e1, e2, e3));
    CHECK(meet(gf, join(gf, e1, e2), join(gf, e1, e3)) == e1);
    CHECK_THROWS_AS(join(gf, e1, e1), std::invalid_argument);

    // Fano: 7 points, every line has 3 points.
    CHECK(plane_size(gf) == 7);
    std::size_t on_z = 0;
    for_each_subplane_point(gf, 1, [&](const ProjPoint& p) { on_z += incident(gf, p, z); });
    CHECK(on_z == 3);
}

TEST_CASE("plane sizes match q^2+q+1") {
    for (auto [p, d] : {std::pair<std::uint64_t, std::uint32_t>{2, 1}, {3, 1}, {2, 2}, {5, 1}, {3, 2}}) {
        GaloisField gf(p, d, d);  // base = whole field
        std::uint64_t q = gf.size();
        CHECK(plane_size(gf) == q * q + q + 1);
    }
}

TEST_CASE("join commutes with frobenius and duality holds") {
    std::mt19937 rng(5);
    const std::vector<std::tuple<std::uint64_t, std::uint32_t, std::uint32_t>> fields{
        {2, 6, 1}, {3, 4, 1}, {2, 6, 2}, {5, 2, 1}};
    for (auto [p, d, m] : fields) {
        GaloisField gf(p, d, m);
        for (int i = 0; i < 500; ++i) {
            ProjPoint a = random_point(gf, rng), b = random_point(gf, rng);
            if (a == b) continue;
            ProjLine l = join(gf, a, b);
            CHECK(incident(gf, a, l));
            CHECK(incident(gf, b, l));
            CHECK(line_frobenius(gf, l) == join(gf, point_frobenius(gf, a), point_frobenius(gf, b)));
            // meet of distinct lines through a recovers a
            ProjPoint c = random_point(gf, rng);
            if (c == a || c == b || collinear(gf, a, b, c)) continue;
            CHECK(meet(gf, l, join(gf, a, c)) == a);
            ProjPoint fc = point_frobenius(gf, c);
            if (!(fc == a) && !(fc == c))
                CHECK(concurrent(gf, l, join(gf, a, c), join(gf, a, fc)));  // all pass through a
        }
    }
}

TEST_CASE("frobenius preserves normalization") {
    GaloisField gf(3, 4);
    std::mt19937 rng(17);
    for (int i = 0; i < 1000; ++i) {
        ProjPoint p = random_point(gf, rng);
        ProjPoint f = point_frobenius(gf, p);
        GFElem lead = f.x ? f.x : (f.y ? f.y : f.z);
        CHECK(lead == 1);
        CHECK((p.x == 0) == (f.x == 0));
        CHECK((p.y == 0) == (f.y == 0));
    }
}

TEST_CASE("orbit size equals lcm of coordinate degrees and exhausts the orbit") {
    std::mt19937 rng(19);
    GaloisField gf(2, 6);
    for (int i = 0; i < 2000; ++i) {
        ProjPoint p = random_point(gf, rng);
        auto orbit = point_orbit(gf, p);
        CHECK(orbit.size() == point_degree(gf, p));
        std::set<std::tuple<GFElem, GFElem, GFElem>> distinct;
        for (const auto& o : orbit) distinct.insert(std::make_tuple(o.x, o.y, o.z));
        CHECK(distinct.size() == orbit.size());
        CHECK(6 % orbit.size() == 0);
    }
}

TEST_CASE("degree census of the plane over GF(4)") {
    GaloisField gf(2, 2);  // ambient F_4 over F_2, so degrees 1 and 2
    std::size_t deg1 = 0, deg2 = 0;
    for_each_subplane_point(gf, 2, [&](const ProjPoint& p) {
        (point_degree(gf, p) == 1 ? deg1 : deg2)++;
    });
    CHECK(deg1 == 7);        // P^2(F_2)
    CHECK(deg2 == 21 - 7);   // q^4 - q at q = 2
}

TEST_CASE("genericity: join shortcut agrees with the full line scan") {
    // Every point of degree >= 3 in small ambient planes, both routes.
    for (auto [p, d] : {std::pair<std::uint64_t, std::uint32_t>{2, 3}, {2, 4}, {3, 3}, {2, 6}}) {
        GaloisField gf(p, d);
        std::size_t checked = 0;
        for_each_subplane_point(gf, d, [&](const ProjPoint& pt) {
            if (point_degree(gf, pt) < 3) return;
            auto fast = genericity_witness(gf, pt);
            auto slow = genericity_witness_by_scan(gf, pt);
            CHECK(fast == slow);
            ++checked;
        });
        CHECK(checked > 0);
    }
}

TEST_CASE("generic degree-3 points of the plane over GF(8)") {
    GaloisField gf(2, 3);
    std::size_t generic = 0, deg3 = 0;
    for_each_subplane_point(gf, 3, [&](const ProjPoint& p) {
        if (point_degree(gf, p) != 3) return;
        ++deg3;
        if (is_generic(gf, p)) ++generic;
    });
    CHECK(deg3 == 66);      // q^6 + q^3 - q^2 - q at q = 2
    CHECK(generic == 24);   // q^3 (q-1)^2 (q+1) at q = 2
}

TEST_CASE("genericity witness degrees are the advertised ones") {
    GaloisField gf(2, 6);
    std::mt19937 rng(23);
    int seen_bad = 0, seen_good = 0;
    for (int i = 0; i < 4000; ++i) {
        ProjPoint p = random_point(gf, rng);
        std::uint32_t n = point_degree(gf, p);
        if (n < 3) continue;
        auto w = genericity_witness(gf, p);
        if (w) {
            ++seen_bad;
            CHECK(*w < (n % 2 == 0 ? n / 2 : n));
            CHECK(*w >= 1);
        } else {
            ++seen_good;
        }
    }
    CHECK(seen_bad > 0);
    CHECK(seen_good > 0);
}
