#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rankmod/bigint.hpp"

namespace rankmod {

// All finite-n bounds on A(n,d) for one pair, plus the rate window.
struct bounds_report {
    int n = 0;
    int d = 0;
    long N = 0;

    bigint singleton_upper;
    bool singleton_trivial = false;
    bigint sphere_upper;
    bigint l1_upper;
    bigrat l1_upper_closed;
    bool l1_upper_closed_clamped = false;
    std::optional<bigrat> plotkin_upper;  // only when 2d > N

    bigint gilbert_lower;
    bool gilbert_even_d_generalized = false;  // classical form assumes odd d
    bigint l1_lower;
    bigrat l1_lower_closed;
    int bch_t = 0;
    bigrat bch_existence_lower;  // idealized n!/(N+1)^t, report-only
    bigint bch_pow2_lower;       // rigorous power-of-two form, enters best_lower

    bigint best_upper;
    bigint best_lower;
    double rate_lower = 0.0;
    double rate_upper = 0.0;
};

bigint singleton_upper(int n, int d, bool* trivial = nullptr);
bigint sphere_upper(int n, int d);
bigint gilbert_lower(int n, int d);
bigint l1_upper(int n, int d);
bigint l1_lower(int n, int d);
// (lower, upper) closed forms; *clamped set if any upper summand was negative.
std::pair<bigrat, bigrat> l1_closed_forms(int n, int d, bool* clamped = nullptr);
std::optional<bigrat> plotkin_upper(int n, int d);
bigrat bch_existence_lower(int n, int t);
bigint bch_pow2_lower(int n, int t);
bounds_report make_bounds_report(int n, int d);

// Natural log of a positive big integer, safe for values beyond double range.
double log_bigint(const bigint& x);

// Stable flat key->value serialization (integers as decimals, rationals as
// "p/q", rates with 6 fractional digits).
std::vector<std::pair<std::string, std::string>> report_keyvalues(const bounds_report& r);

std::string rat_str(const bigrat& x);

}  // namespace rankmod
