#include "doctest.h"

#include <cstdint>
#include <vector>

#include "arccount/census.hpp"
#include "arccount/cycle_type.hpp"
#include "arccount/twisted.hpp"

using namespace arccount;

namespace {
CycleType ct(const char* text, std::uint32_t n) { return CycleType::parse(text, n); }
}  // namespace

TEST_CASE("prime power factoring") {
    CHECK(factor_prime_power(2).p == 2);
    CHECK(factor_prime_power(2).m == 1);
    CHECK(factor_prime_power(8).p == 2);
    CHECK(factor_prime_power(8).m == 3);
    CHECK(factor_prime_power(9).p == 3);
    CHECK(factor_prime_power(9).m == 2);
    CHECK(factor_prime_power(7).m == 1);
    CHECK_THROWS_AS(factor_prime_power(6), std::invalid_argument);
    CHECK_THROWS_AS(factor_prime_power(1), std::invalid_argument);
    CHECK_THROWS_AS(factor_prime_power(0), std::invalid_argument);
}

TEST_CASE("PGL_3 group orders") {
    CHECK(pgl3_order(2) == 168);
    CHECK(pgl3_order(3) == 5616);
    CHECK(pgl3_order(4) == 60480);
    CHECK(pgl3_order(5) == 372000);
    CHECK(pgl3_order(7) == 5630688);
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9})
        CHECK(pgl3_order_poly().eval_int(q) == mpz_class((unsigned long)pgl3_order(q)));
}

TEST_CASE("work estimates") {
    CHECK(estimate_tuples(5, CycleType::identity(5), 2) == 16807);  // (q^2+q+1)^5
    CHECK(estimate_tuples(5, ct("(12345)", 5), 2) == 840);          // generic degree-5 pool
    CHECK(estimate_tuples(6, ct("(123456)", 6), 4) == 15664320);
    CHECK(estimate_tuples(6, ct("(12)(34)", 6), 3) == 78u * 78u * 13u * 13u);
    // saturates instead of wrapping
    CHECK(estimate_tuples(6, CycleType::identity(6), 64) == ~std::uint64_t(0));
}

TEST_CASE("budget gate throws before any enumeration") {
    EnumerationOptions opts;
    opts.budget = 1000;
    try {
        count_twisted(5, CycleType::identity(5), 2, opts);
        FAIL("expected BudgetExceeded");
    } catch (const BudgetExceeded& e) {
        CHECK(e.estimate == 16807);
        CHECK(e.budget == 1000);
    }
}

TEST_CASE("frame counts match the closed forms") {
    // |X_5| = (q-2)(q-3), |X_6| = (q-2)(q-3)(q^2-9q+21)
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
        CHECK(mpz_class((unsigned long)frame_fixed_count(5, q)) ==
              frame_count_poly(5).eval_int(q));
        CHECK(mpz_class((unsigned long)frame_fixed_count(6, q)) ==
              frame_count_poly(6).eval_int(q));
    }
    CHECK(frame_fixed_count(4, 5) == 1);
    CHECK(frame_fixed_count(5, 2) == 0);
    CHECK(frame_fixed_count(5, 5) == 6);
    CHECK(frame_fixed_count(6, 7) == 140);
}

TEST_CASE("identity class via frames") {
    auto r5 = count_identity_via_frames(5, 5);
    CHECK(r5.count == 18600);  // 372000 * 6 / 120
    CHECK(r5.method == "frame_fixed_brute");
    CHECK(count_identity_via_frames(5, 2).count == 0);
    CHECK(count_identity_via_frames(5, 3).count == 0);
    CHECK(count_identity_via_frames(5, 4).count == 1008);  // 60480 * 2 / 120
    CHECK(count_identity_via_frames(6, 2).count == 0);
    CHECK(count_identity_via_frames(6, 7).count == 1094856);  // 5630688 * 140 / 720
}

TEST_CASE("identity class: direct enumeration agrees with frame fixing") {
    // n = 3 over F_2: C(7,3) - 7 lines = 28 noncollinear triples
    auto r3 = count_twisted(3, CycleType::identity(3), 2);
    CHECK(r3.count == 28);
    CHECK(r3.raw_tuples == 168);
    CHECK(r3.method == "brute");

    auto r6 = count_twisted(6, CycleType::identity(6), 2);
    CHECK(r6.count == 0);  // X_6(F_2) is empty

    auto r5 = count_twisted(5, CycleType::identity(5), 4);
    CHECK(r5.count == count_identity_via_frames(5, 4).count);
}

TEST_CASE("twisted counts for n = 5") {
    CHECK(count_twisted(5, ct("(12)", 5), 2).count == 28);
    auto r = count_twisted(5, ct("(12)", 5), 3);
    CHECK(r.count == 2808);
    CHECK(r.raw_tuples == 2808u * 12u);  // centralizer of (2,1,1,1) has order 12
    CHECK(count_twisted(5, ct("(123)(45)", 5), 2).count == 56);
    CHECK(count_twisted(5, ct("(1234)", 5), 2).count == 252);
    CHECK(count_twisted(5, ct("(12345)", 5), 2).count == 168);
}

TEST_CASE("twisted counts for n = 6") {
    CHECK(count_twisted(6, ct("(12)", 6), 2).count == 7);
    CHECK(count_twisted(6, ct("(12)(34)", 6), 2).count == 0);    // q^2-q-2 vanishes
    CHECK(count_twisted(6, ct("(12)(34)", 6), 3).count == 4212);
    CHECK(count_twisted(6, ct("(12)(34)(56)", 6), 2).count == 7);
    CHECK(count_twisted(6, ct("(123)(456)", 6), 2).count == 28);
    CHECK(count_twisted(6, ct("(123456)", 6), 2).count == 476);  // 2856 / 6
}

TEST_CASE("count does not depend on enumeration order or threading") {
    const CycleType c = ct("(123)(45)", 5);
    const std::uint64_t expect = 56;

    EnumerationOptions opts;
    opts.part_order = {2, 3};
    CHECK(count_twisted(5, c, 2, opts).count == expect);

    opts = {};
    opts.reverse = true;
    CHECK(count_twisted(5, c, 2, opts).count == expect);

    opts = {};
    opts.jobs = 2;
    CHECK(count_twisted(5, c, 2, opts).count == expect);

    opts = {};
    opts.part_order = {1, 2, 1, 1, 1};  // not a permutation of (2,1,1,1,1)
    CHECK_THROWS_AS(count_twisted(5, ct("(12)", 5), 2, opts), std::invalid_argument);
}

TEST_CASE("identity raw count is divisible by n! with quotient |X_n|-consistent") {
    // 120 p_{5,e}(q) = |PGL_3(F_q)| |X_5(F_q)| as integers, sampled
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
        auto r = count_identity_via_frames(5, q);
        CHECK(r.raw_tuples == r.count * 120);
        CHECK(mpz_class((unsigned long)r.count) * 120 ==
              mpz_class((unsigned long)pgl3_order(q)) * frame_count_poly(5).eval_int(q));
    }
}
