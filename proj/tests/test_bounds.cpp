#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "rankmod/bounds.hpp"
#include "rankmod/enumeration.hpp"

using namespace rankmod;

TEST_SUITE("bounds") {

TEST_CASE("singleton-type bound") {
    bool trivial = true;
    CHECK(singleton_upper(4, 4, &trivial) == 6);
    CHECK_FALSE(trivial);
    CHECK(singleton_upper(5, 5, &trivial) == 24);
    CHECK_FALSE(trivial);
    CHECK(singleton_upper(4, 3, &trivial) == 24);  // d <= n-1: trivial regime
    CHECK(trivial);
}

TEST_CASE("sphere-packing upper and Gilbert lower") {
    CHECK(sphere_upper(4, 3) == 6);
    CHECK(gilbert_lower(4, 3) == 3);
    for (int n = 2; n <= 6; ++n) {
        CHECK(sphere_upper(n, 1) == factorial(n));
        CHECK(gilbert_lower(n, 1) == factorial(n));
    }
    // A(n,3) <= (n-1)! reproduced by the sphere bound, n <= 8
    for (int n = 3; n <= 8; ++n) CHECK(sphere_upper(n, 3) <= factorial(n - 1));
}

TEST_CASE("l1-embedding bounds, exact sums") {
    CHECK(l1_upper(4, 1) == 256);
    CHECK(l1_upper(3, 2) == 27);
    CHECK(l1_lower(4, 2) >= 1);
    // independent recomputation of the d=2 lower bound denominator
    bigint qsum = 0;
    for (long r = 0; r <= 3; ++r) qsum += q_count(4, r);
    CHECK(l1_lower(4, 2) == ceil_div(factorial(4), pow2(4) * qsum));
}

TEST_CASE("l1-embedding bounds, closed forms") {
    bool clamped = true;
    const auto [lo32, hi32] = l1_closed_forms(3, 2, &clamped);
    CHECK(lo32 == bigrat(6, 160));
    CHECK_FALSE(clamped);
    CHECK(hi32 == bigrat(27, 1));  // t = 0: single unit summand

    const auto [lo43, hi43] = l1_closed_forms(4, 3);
    CHECK(ceil_rat(lo43) <= exact_optimal_size(4, 3));
    CHECK(hi43 > 0);

    // closed lower never exceeds the exact-sum lower's value before rounding,
    // and the exact-denominator upper <= the closed-form upper (denominator dominance)
    for (int n = 3; n <= 8; ++n)
        for (int d = 1; d <= n * (n - 1) / 2; ++d) {
            const auto [lo, hi] = l1_closed_forms(n, d);
            CHECK(ceil_rat(lo) <= l1_lower(n, d));
            CHECK(bigrat(l1_upper(n, d)) <= hi);
        }
}

TEST_CASE("Plotkin bound when 2d exceeds the diameter") {
    CHECK_FALSE(plotkin_upper(4, 3).has_value());  // 2d = N boundary
    REQUIRE(plotkin_upper(4, 4).has_value());
    CHECK(*plotkin_upper(4, 4) == bigrat(4, 1));
    REQUIRE(plotkin_upper(3, 3).has_value());
    CHECK(*plotkin_upper(3, 3) == bigrat(2, 1));
    CHECK(exact_optimal_size(3, 3) == 2);  // the bound is met
}

TEST_CASE("BCH-style existence values") {
    CHECK(bch_existence_lower(5, 1) == bigrat(120, 11));
    CHECK(bch_existence_lower(4, 1) == bigrat(24, 7));
    CHECK(bch_existence_lower(6, 0) == bigrat(720, 1));
    // rigorous power-of-two variant: N=10 -> s=4, t=1 -> 120/16
    CHECK(bch_pow2_lower(5, 1) == ceil_div(factorial(5), bigint(16)));
    CHECK(bch_pow2_lower(5, 0) == factorial(5));
}

TEST_CASE("aggregated report") {
    const bounds_report r43 = make_bounds_report(4, 3);
    CHECK(r43.best_upper <= 6);
    CHECK(r43.best_lower >= 3);
    CHECK(r43.best_lower <= r43.best_upper);
    CHECK(r43.singleton_trivial);

    const bounds_report r31 = make_bounds_report(3, 1);
    CHECK(r31.best_upper == 6);
    CHECK(r31.best_lower == 6);

    const bounds_report r55 = make_bounds_report(5, 5);
    const bigint a55 = exact_optimal_size(5, 5);
    CHECK(r55.best_lower <= a55);
    CHECK(a55 <= r55.best_upper);

    CHECK_THROWS_AS(make_bounds_report(4, 7), std::invalid_argument);
    CHECK_THROWS_AS(make_bounds_report(4, 0), std::invalid_argument);
    CHECK_THROWS_AS(make_bounds_report(1, 1), std::invalid_argument);
}

TEST_CASE("monotonicity in d") {
    for (int n = 4; n <= 7; ++n) {
        const long N = n * (n - 1) / 2;
        bounds_report prev = make_bounds_report(n, 1);
        for (int d = 2; d <= N; ++d) {
            const bounds_report cur = make_bounds_report(n, d);
            CHECK(cur.singleton_upper <= prev.singleton_upper);
            CHECK(cur.sphere_upper <= prev.sphere_upper);
            CHECK(cur.l1_upper <= prev.l1_upper);
            CHECK(cur.gilbert_lower <= prev.gilbert_lower);
            CHECK(cur.best_upper <= prev.best_upper);
            prev = cur;
        }
    }
}

TEST_CASE("rate window at n = 12, d = ceil(n^1.5)") {
    const int n = 12;
    const int d = static_cast<int>(std::ceil(std::pow(n, 1.5)));  // 42 <= N = 66
    const bounds_report r = make_bounds_report(n, d);
    CHECK(r.rate_lower <= r.rate_upper);
    CHECK(r.rate_lower > 0.0);
    CHECK(r.rate_upper < 1.0);
}

TEST_CASE("report serialization is stable") {
    const auto kv = report_keyvalues(make_bounds_report(4, 3));
    REQUIRE(kv.size() == 21);
    CHECK(kv[0] == std::pair<std::string, std::string>{"n", "4"});
    CHECK(kv[1] == std::pair<std::string, std::string>{"d", "3"});
    CHECK(kv[2] == std::pair<std::string, std::string>{"N", "6"});
    CHECK(kv[3].first == "singleton_upper");
    CHECK(kv[3].second == "24");
    CHECK(kv[9] == std::pair<std::string, std::string>{"plotkin_upper", "na"});
    CHECK(kv[19].first == "rate_lower");
    CHECK(kv[20].first == "rate_upper");
    CHECK(rat_str(bigrat(6, 160)) == "3/80");

    // log of a value far beyond double range stays finite and accurate
    const double lg = log_bigint(factorial(200));
    CHECK(lg > 0);
    CHECK(lg == doctest::Approx(863.23199).epsilon(1e-5));
}

}  // TEST_SUITE
