#include "rankmod/field.hpp"

#include <stdexcept>
#include <string>

#include "rankmod/errors.hpp"

namespace rankmod {

namespace {

std::vector<long> decode_poly(long code, long p, int len) {
    std::vector<long> c(len, 0);
    for (int i = 0; i < len && code > 0; ++i) {
        c[i] = code % p;
        code /= p;
    }
    return c;
}

int poly_degree(const std::vector<long>& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[i] != 0) return i;
    return -1;
}

// Remainder of a modulo monic divisor b over GF(p).
std::vector<long> poly_rem(std::vector<long> a, const std::vector<long>& b, long p) {
    const int db = poly_degree(b);
    for (int i = poly_degree(a); i >= db; i = poly_degree(a)) {
        const long f = a[i];  // b is monic
        if (f != 0)
            for (int j = 0; j <= db; ++j) {
                a[i - db + j] = (a[i - db + j] - f * b[j]) % p;
                if (a[i - db + j] < 0) a[i - db + j] += p;
            }
        a[i] = 0;
    }
    return a;
}

bool is_irreducible(const std::vector<long>& m, long p, int e) {
    if (e == 1) return true;
    for (int dd = 1; dd <= e / 2; ++dd) {
        long count = 1;
        for (int i = 0; i < dd; ++i) count *= p;
        for (long code = 0; code < count; ++code) {
            std::vector<long> div = decode_poly(code, p, dd + 1);
            div[dd] = 1;
            if (poly_degree(poly_rem(m, div, p)) < 0) return false;
        }
    }
    return true;
}

std::vector<long> prime_factors(long x) {
    std::vector<long> fs;
    for (long f = 2; f * f <= x; ++f)
        if (x % f == 0) {
            fs.push_back(f);
            while (x % f == 0) x /= f;
        }
    if (x > 1) fs.push_back(x);
    return fs;
}

}  // namespace

bool finite_field::is_prime(long p) {
    if (p < 2) return false;
    for (long f = 2; f * f <= p; ++f)
        if (p % f == 0) return false;
    return true;
}

std::optional<std::pair<long, int>> finite_field::prime_power(long q) {
    if (q < 2) return std::nullopt;
    long p = q;
    for (long f = 2; f * f <= q; ++f)
        if (q % f == 0) {
            p = f;
            break;
        }
    int e = 0;
    long rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++e;
    }
    if (rest != 1) return std::nullopt;
    return std::make_pair(p, e);
}

long finite_field::mul_poly(long a, long b) const {
    std::vector<long> pa = decode_poly(a, p_, e_), pb = decode_poly(b, p_, e_);
    std::vector<long> prod(2 * e_ - 1, 0);
    for (int i = 0; i < e_; ++i) {
        if (pa[i] == 0) continue;
        for (int j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p_;
    }
    prod = poly_rem(std::move(prod), modulus_, p_);
    long code = 0;
    for (int i = e_ - 1; i >= 0; --i) code = code * p_ + prod[i];
    return code;
}

finite_field::finite_field(long p, int e) : p_(p), e_(e) {
    if (!is_prime(p)) throw std::invalid_argument("finite_field: p=" + std::to_string(p) + " is not prime");
    if (e < 1) throw std::invalid_argument("finite_field: extension degree must be >= 1");
    q_ = 1;
    for (int i = 0; i < e; ++i) {
        if (q_ > kTableCap / p) throw cap_exceeded("finite_field: p^e exceeds table cap 10^7");
        q_ *= p;
    }

    // Lexicographically smallest monic irreducible of degree e (by the integer
    // code of the non-leading coefficients).
    modulus_.assign(e + 1, 0);
    modulus_[e] = 1;
    bool found = false;
    for (long code = 0; code < q_; ++code) {
        std::vector<long> m = decode_poly(code, p, e + 1);
        m[e] = 1;
        if (is_irreducible(m, p, e)) {
            modulus_ = std::move(m);
            found = true;
            break;
        }
    }
    if (!found) throw verification_error("finite_field: no irreducible modulus found (internal bug)");

    // Primitive element: ascending search with an exact order check.
    if (q_ == 2) {
        theta_ = 1;
    } else {
        const auto factors = prime_factors(q_ - 1);
        for (long g = 2; g < q_; ++g) {
            bool primitive = true;
            for (const long f : factors) {
                // g^((q-1)/f) == 1 would make the order a proper divisor.
                long r = 1, base = g, k = (q_ - 1) / f;
                while (k > 0) {
                    if (k & 1) r = mul_poly(r, base);
                    base = mul_poly(base, base);
                    k >>= 1;
                }
                if (r == 1) {
                    primitive = false;
                    break;
                }
            }
            if (primitive) {
                theta_ = g;
                break;
            }
        }
        if (theta_ == 0) throw verification_error("finite_field: no primitive element found (internal bug)");
    }

    antilog_.resize(q_ - 1);
    log_.assign(q_, -1);
    long v = 1;
    for (long k = 0; k < q_ - 1; ++k) {
        if (log_[v] != -1) throw verification_error("finite_field: theta order check failed (internal bug)");
        antilog_[k] = static_cast<int>(v);
        log_[v] = static_cast<int>(k);
        v = mul_poly(v, theta_);
    }
    if (v != 1) throw verification_error("finite_field: theta^(q-1) != 1 (internal bug)");
}

long finite_field::add(long a, long b) const {
    long r = 0, w = 1;
    for (int i = 0; i < e_; ++i) {
        r += w * ((a % p_ + b % p_) % p_);
        a /= p_;
        b /= p_;
        w *= p_;
    }
    return r;
}

long finite_field::sub(long a, long b) const {
    long r = 0, w = 1;
    for (int i = 0; i < e_; ++i) {
        r += w * ((a % p_ - b % p_ + p_) % p_);
        a /= p_;
        b /= p_;
        w *= p_;
    }
    return r;
}

long finite_field::mul(long a, long b) const {
    if (a == 0 || b == 0) return 0;
    return antilog_[(log_[a] + log_[b]) % (q_ - 1)];
}

long finite_field::inv(long a) const {
    if (a == 0) throw std::invalid_argument("finite_field: inverse of zero");
    return antilog_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

long finite_field::pow(long a, long k) const {
    if (k < 0) throw std::invalid_argument("finite_field: negative exponent");
    if (a == 0) return k == 0 ? 1 : 0;
    return antilog_[static_cast<long>((static_cast<long long>(log_[a]) * k) % (q_ - 1))];
}

long finite_field::log(long a) const {
    if (a <= 0 || a >= q_) throw std::invalid_argument("finite_field: log of " + std::to_string(a));
    return log_[a];
}

long finite_field::antilog(long k) const {
    long r = k % (q_ - 1);
    if (r < 0) r += q_ - 1;
    return antilog_[r];
}

}  // namespace rankmod
