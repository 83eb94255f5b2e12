#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rankmod {

// A permutation of {1..n} in one-line notation. Validated on construction;
// immutable afterwards, so all operations may assume validity.
class permutation {
  public:
    explicit permutation(std::vector<int> entries);

    static permutation identity(int n);
    static permutation parse(const std::string& text);  // "2,1,4,3"

    int size() const { return static_cast<int>(v_.size()); }
    int operator()(int i) const { return v_[i - 1]; }  // 1-based
    const std::vector<int>& entries() const { return v_; }
    std::string str() const;

    bool operator==(const permutation& o) const { return v_ == o.v_; }
    bool operator!=(const permutation& o) const { return v_ != o.v_; }
    bool operator<(const permutation& o) const { return v_ < o.v_; }

  private:
    std::vector<int> v_;
};

// Element of G_n = Z_2 x ... x Z_n: coords[i-1] = x(i) in {0..i}, i = 1..n-1.
struct inversion_vector {
    std::vector<int> coords;

    int n() const { return static_cast<int>(coords.size()) + 1; }
    std::string str() const;
    static inversion_vector parse(const std::string& text);

    bool operator==(const inversion_vector& o) const { return coords == o.coords; }
    bool operator<(const inversion_vector& o) const { return coords < o.coords; }
};

// Binary image of length N = n(n-1)/2, one bit per position pair (i,j),
// i < j, in lexicographic order of (i,j); bit = 1 iff the pair is inverted.
struct hamming_image {
    int n = 0;
    std::vector<std::uint8_t> bits;
};

int kendall_distance(const permutation& s, const permutation& p);
int inversion_count(const permutation& s);
inversion_vector to_inversion_vector(const permutation& s);
permutation from_inversion_vector(const inversion_vector& x);
permutation compose(const permutation& s, const permutation& t);  // i -> s(t(i))
permutation inverse(const permutation& s);
long l1_distance(const inversion_vector& x, const inversion_vector& y);
long footrule(const permutation& s, const permutation& p);
int cayley_distance(const permutation& s, const permutation& p);
hamming_image to_hamming_image(const permutation& s);
int hamming_distance(const hamming_image& a, const hamming_image& b);

}  // namespace rankmod
