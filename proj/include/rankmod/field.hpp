#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace rankmod {

// GF(p^e) with elements encoded as integers in [0, p^e): the coefficient
// vector of the residue polynomial, little-endian base p. Log/antilog tables
// are built against a fixed primitive element theta.
class finite_field {
  public:
    finite_field(long p, int e);

    long p() const { return p_; }
    int e() const { return e_; }
    long q() const { return q_; }  // p^e
    long theta() const { return theta_; }
    const std::vector<long>& modulus() const { return modulus_; }  // length e+1, monic

    long add(long a, long b) const;
    long sub(long a, long b) const;
    long mul(long a, long b) const;
    long inv(long a) const;
    long pow(long a, long k) const;

    long log(long a) const;      // a != 0; discrete log base theta
    long antilog(long k) const;  // theta^k, k taken mod q-1

    static bool is_prime(long p);
    // q -> (p, e) if q is a prime power, else nullopt.
    static std::optional<std::pair<long, int>> prime_power(long q);

    static constexpr long kTableCap = 10'000'000;

  private:
    long p_;
    int e_;
    long q_;
    long theta_ = 0;
    std::vector<long> modulus_;
    std::vector<int> log_, antilog_;

    long mul_poly(long a, long b) const;  // table-free, used during setup
};

}  // namespace rankmod
