#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace rankmod {

using bigint = boost::multiprecision::cpp_int;
using bigrat = boost::multiprecision::cpp_rational;

inline bigint factorial(long n) {
    bigint r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

// C(a, b) with the convention used throughout: 0 whenever b < 0 or b > a.
inline bigint binomial(long a, long b) {
    if (b < 0 || b > a) return 0;
    if (a - b < b) b = a - b;
    bigint r = 1;
    for (long i = 1; i <= b; ++i) {
        r *= a - b + i;
        r /= i;
    }
    return r;
}

inline bigint floor_div(const bigint& a, const bigint& b) {
    bigint q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

inline bigint ceil_div(const bigint& a, const bigint& b) {
    return -floor_div(-a, b);
}

inline bigint floor_rat(const bigrat& x) {
    return floor_div(numerator(x), denominator(x));
}

inline bigint ceil_rat(const bigrat& x) {
    return ceil_div(numerator(x), denominator(x));
}

inline bigint isqrt(const bigint& x) { return boost::multiprecision::sqrt(x); }

inline bigint pow2(long e) { return bigint(1) << e; }

}  // namespace rankmod
