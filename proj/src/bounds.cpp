#include "rankmod/bounds.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "rankmod/enumeration.hpp"

namespace rankmod {

namespace {

void require_nd(int n, int d) {
    if (n < 2) throw std::invalid_argument("bounds require n >= 2");
    const long N = static_cast<long>(n) * (n - 1) / 2;
    if (d < 1 || d > N)
        throw std::invalid_argument("bounds require 1 <= d <= N=" + std::to_string(N) +
                                    ", got d=" + std::to_string(d));
}

}  // namespace

bigint singleton_upper(int n, int d, bool* trivial) {
    require_nd(n, d);
    if (d <= n - 1) {
        if (trivial) *trivial = true;
        return factorial(n);
    }
    if (trivial) *trivial = false;
    const bigint S = bigint(n) * (n - 1) - 2 * d;
    const bigint arg = (3 + isqrt(4 * S + 1)) / 2;
    return factorial(arg.convert_to<long>());
}

bigint sphere_upper(int n, int d) {
    require_nd(n, d);
    const long t = (d - 1) / 2;
    return floor_div(factorial(n), kendall_ball_volume(n, t));
}

bigint gilbert_lower(int n, int d) {
    require_nd(n, d);
    return ceil_div(factorial(n), kendall_ball_volume(n, d - 1));
}

namespace {

bigint q_partial_sum(int n, long hi) {
    bigint s = 0;
    for (long r = 0; r <= hi; ++r) s += q_count(n, r);
    return s;
}

}  // namespace

bigint l1_upper(int n, int d) {
    require_nd(n, d);
    const long t = (d - 1) / 2;
    const bigint nn = boost::multiprecision::pow(bigint(n), n);
    return floor_div(nn, q_partial_sum(n, t));
}

bigint l1_lower(int n, int d) {
    require_nd(n, d);
    return ceil_div(factorial(n), pow2(n) * q_partial_sum(n, 2L * d - 1));
}

std::pair<bigrat, bigrat> l1_closed_forms(int n, int d, bool* clamped) {
    require_nd(n, d);
    if (clamped) *clamped = false;
    const bigrat lower = bigrat(factorial(n), pow2(n) * binomial(n + 2 * d - 1, 2 * d - 1));
    const long t = (d - 1) / 2;
    bigint denom = 0;
    for (long r = 0; r <= t; ++r) {
        bigint summand = binomial(n + r - 1, r) - n * binomial(r - 1, r - n);
        if (summand < 0) {
            summand = 0;
            if (clamped) *clamped = true;
        }
        denom += summand;
    }
    const bigint nn = boost::multiprecision::pow(bigint(n), n);
    return {lower, bigrat(nn, denom)};
}

std::optional<bigrat> plotkin_upper(int n, int d) {
    require_nd(n, d);
    const long N = static_cast<long>(n) * (n - 1) / 2;
    if (2L * d <= N) return std::nullopt;
    return bigrat(2 * d, 2L * d - N);
}

bigrat bch_existence_lower(int n, int t) {
    if (n < 2 || t < 0) throw std::invalid_argument("bch_existence_lower requires n >= 2, t >= 0");
    const long N = static_cast<long>(n) * (n - 1) / 2;
    return bigrat(factorial(n), boost::multiprecision::pow(bigint(N + 1), t));
}

bigint bch_pow2_lower(int n, int t) {
    if (n < 2 || t < 0) throw std::invalid_argument("bch_pow2_lower requires n >= 2, t >= 0");
    const long N = static_cast<long>(n) * (n - 1) / 2;
    long s = 0;
    while ((1L << s) < N + 1) ++s;  // ceil(log2(N+1))
    return ceil_div(factorial(n), pow2(t * s));
}

double log_bigint(const bigint& x) {
    if (x < 1) throw std::invalid_argument("log_bigint requires x >= 1");
    const unsigned bits = boost::multiprecision::msb(x);
    if (bits < 900) return std::log(x.convert_to<double>());
    const bigint scaled = x >> (bits - 64);
    return std::log(scaled.convert_to<double>()) + static_cast<double>(bits - 64) * std::log(2.0);
}

bounds_report make_bounds_report(int n, int d) {
    require_nd(n, d);
    bounds_report r;
    r.n = n;
    r.d = d;
    r.N = static_cast<long>(n) * (n - 1) / 2;

    r.singleton_upper = singleton_upper(n, d, &r.singleton_trivial);
    r.sphere_upper = sphere_upper(n, d);
    r.l1_upper = l1_upper(n, d);
    auto closed = l1_closed_forms(n, d, &r.l1_upper_closed_clamped);
    r.l1_lower_closed = closed.first;
    r.l1_upper_closed = closed.second;
    r.plotkin_upper = plotkin_upper(n, d);

    r.gilbert_lower = gilbert_lower(n, d);
    r.gilbert_even_d_generalized = (d % 2 == 0);
    r.l1_lower = l1_lower(n, d);
    r.bch_t = d / 2;  // smallest t with 2t+1 >= d
    r.bch_existence_lower = bch_existence_lower(n, r.bch_t);
    r.bch_pow2_lower = bch_pow2_lower(n, r.bch_t);

    r.best_upper = r.singleton_upper;
    if (r.sphere_upper < r.best_upper) r.best_upper = r.sphere_upper;
    if (r.l1_upper < r.best_upper) r.best_upper = r.l1_upper;
    const bigint l1uc = floor_rat(r.l1_upper_closed);
    if (l1uc < r.best_upper) r.best_upper = l1uc;
    if (r.plotkin_upper) {
        const bigint pk = floor_rat(*r.plotkin_upper);
        if (pk < r.best_upper) r.best_upper = pk;
    }

    r.best_lower = 1;
    if (r.gilbert_lower > r.best_lower) r.best_lower = r.gilbert_lower;
    if (r.l1_lower > r.best_lower) r.best_lower = r.l1_lower;
    const bigint l1lc = ceil_rat(r.l1_lower_closed);
    if (l1lc > r.best_lower) r.best_lower = l1lc;
    if (r.bch_pow2_lower > r.best_lower) r.best_lower = r.bch_pow2_lower;

    const double lognf = log_bigint(factorial(n));
    r.rate_lower = log_bigint(r.best_lower) / lognf;
    r.rate_upper = log_bigint(r.best_upper) / lognf;
    return r;
}

std::string rat_str(const bigrat& x) {
    return numerator(x).str() + "/" + denominator(x).str();
}

namespace {

std::string rate_str(double v) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(6);
    os << v;
    return os.str();
}

}  // namespace

std::vector<std::pair<std::string, std::string>> report_keyvalues(const bounds_report& r) {
    std::vector<std::pair<std::string, std::string>> kv;
    kv.emplace_back("n", std::to_string(r.n));
    kv.emplace_back("d", std::to_string(r.d));
    kv.emplace_back("N", std::to_string(r.N));
    kv.emplace_back("singleton_upper", r.singleton_upper.str());
    kv.emplace_back("singleton_trivial", r.singleton_trivial ? "true" : "false");
    kv.emplace_back("sphere_upper", r.sphere_upper.str());
    kv.emplace_back("l1_upper", r.l1_upper.str());
    kv.emplace_back("l1_upper_closed", rat_str(r.l1_upper_closed));
    kv.emplace_back("l1_upper_closed_clamped", r.l1_upper_closed_clamped ? "true" : "false");
    kv.emplace_back("plotkin_upper", r.plotkin_upper ? rat_str(*r.plotkin_upper) : "na");
    kv.emplace_back("gilbert_lower", r.gilbert_lower.str());
    kv.emplace_back("gilbert_even_d_generalized", r.gilbert_even_d_generalized ? "true" : "false");
    kv.emplace_back("l1_lower", r.l1_lower.str());
    kv.emplace_back("l1_lower_closed", rat_str(r.l1_lower_closed));
    kv.emplace_back("bch_t", std::to_string(r.bch_t));
    kv.emplace_back("bch_existence_lower", rat_str(r.bch_existence_lower));
    kv.emplace_back("bch_pow2_lower", r.bch_pow2_lower.str());
    kv.emplace_back("best_upper", r.best_upper.str());
    kv.emplace_back("best_lower", r.best_lower.str());
    kv.emplace_back("rate_lower", rate_str(r.rate_lower));
    kv.emplace_back("rate_upper", rate_str(r.rate_upper));
    return kv;
}

}  // namespace rankmod
