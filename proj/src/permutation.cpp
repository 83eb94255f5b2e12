#include "rankmod/permutation.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace rankmod {

permutation::permutation(std::vector<int> entries) : v_(std::move(entries)) {
    const int n = static_cast<int>(v_.size());
    if (n < 1) throw std::invalid_argument("permutation must have n >= 1 entries");
    std::vector<char> seen(n + 1, 0);
    for (int i = 0; i < n; ++i) {
        const int e = v_[i];
        if (e < 1 || e > n)
            throw std::invalid_argument("permutation entry at position " + std::to_string(i + 1) +
                                        " out of range [1," + std::to_string(n) + "]: " + std::to_string(e));
        if (seen[e])
            throw std::invalid_argument("permutation entry " + std::to_string(e) +
                                        " repeated at position " + std::to_string(i + 1));
        seen[e] = 1;
    }
}

permutation permutation::identity(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i + 1;
    return permutation(std::move(v));
}

namespace {

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::string tok;
    std::stringstream ss(text);
    int pos = 0;
    while (std::getline(ss, tok, ',')) {
        ++pos;
        size_t used = 0;
        int val = 0;
        try {
            val = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed integer at token " + std::to_string(pos) + ": '" + tok + "'");
        }
        while (used < tok.size() && std::isspace(static_cast<unsigned char>(tok[used]))) ++used;
        if (used != tok.size())
            throw std::invalid_argument("malformed integer at token " + std::to_string(pos) + ": '" + tok + "'");
        out.push_back(val);
    }
    if (out.empty()) throw std::invalid_argument("empty sequence");
    return out;
}

std::string join_int_list(const std::vector<int>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s;
}

}  // namespace

permutation permutation::parse(const std::string& text) { return permutation(parse_int_list(text)); }

std::string permutation::str() const { return join_int_list(v_); }

std::string inversion_vector::str() const { return join_int_list(coords); }

inversion_vector inversion_vector::parse(const std::string& text) {
    inversion_vector x{parse_int_list(text)};
    for (size_t i = 0; i < x.coords.size(); ++i) {
        const int hi = static_cast<int>(i) + 1;
        if (x.coords[i] < 0 || x.coords[i] > hi)
            throw std::invalid_argument("inversion vector coordinate " + std::to_string(i + 1) +
                                        " out of range [0," + std::to_string(hi) + "]: " + std::to_string(x.coords[i]));
    }
    return x;
}

namespace {

void require_same_n(int a, int b) {
    if (a != b)
        throw std::invalid_argument("size mismatch: n=" + std::to_string(a) + " vs n=" + std::to_string(b));
}

int count_inversions_naive(const std::vector<int>& v) {
    const int n = static_cast<int>(v.size());
    int c = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (v[i] > v[j]) ++c;
    return c;
}

int count_inversions_merge(std::vector<int>& v, std::vector<int>& tmp, int lo, int hi) {
    if (hi - lo < 2) return 0;
    const int mid = lo + (hi - lo) / 2;
    int c = count_inversions_merge(v, tmp, lo, mid) + count_inversions_merge(v, tmp, mid, hi);
    int i = lo, j = mid, k = lo;
    while (i < mid && j < hi) {
        if (v[i] <= v[j]) {
            tmp[k++] = v[i++];
        } else {
            c += mid - i;
            tmp[k++] = v[j++];
        }
    }
    while (i < mid) tmp[k++] = v[i++];
    while (j < hi) tmp[k++] = v[j++];
    std::copy(tmp.begin() + lo, tmp.begin() + hi, v.begin() + lo);
    return c;
}

}  // namespace

int inversion_count(const permutation& s) {
    const auto& v = s.entries();
    if (v.size() <= 64) return count_inversions_naive(v);
    std::vector<int> work = v, tmp(v.size());
    return count_inversions_merge(work, tmp, 0, static_cast<int>(work.size()));
}

int kendall_distance(const permutation& s, const permutation& p) {
    require_same_n(s.size(), p.size());
    // d_tau = number of position pairs on which the two orders disagree,
    // which equals the inversion count of the relative permutation.
    return inversion_count(compose(s, inverse(p)));
}

inversion_vector to_inversion_vector(const permutation& s) {
    const int n = s.size();
    if (n < 2) throw std::invalid_argument("inversion vector undefined for n < 2");
    inversion_vector x;
    x.coords.resize(n - 1);
    for (int i = 1; i <= n - 1; ++i) {
        int c = 0;
        for (int j = 1; j <= i; ++j)
            if (s(j) > s(i + 1)) ++c;
        x.coords[i - 1] = c;
    }
    return x;
}

permutation from_inversion_vector(const inversion_vector& x) {
    const int n = x.n();
    for (int i = 1; i <= n - 1; ++i) {
        const int c = x.coords[i - 1];
        if (c < 0 || c > i)
            throw std::invalid_argument("inversion vector coordinate " + std::to_string(i) +
                                        " out of range [0," + std::to_string(i) + "]: " + std::to_string(c));
    }
    // Fill positions right to left: x(k-1) of the values left of position k
    // exceed sigma(k), so sigma(k) is the (k - x(k-1))-th smallest remaining.
    std::vector<int> avail(n);
    for (int i = 0; i < n; ++i) avail[i] = i + 1;
    std::vector<int> v(n);
    for (int k = n; k >= 2; --k) {
        const int idx = k - 1 - x.coords[k - 2];
        v[k - 1] = avail[idx];
        avail.erase(avail.begin() + idx);
    }
    v[0] = avail[0];
    return permutation(std::move(v));
}

permutation compose(const permutation& s, const permutation& t) {
    require_same_n(s.size(), t.size());
    const int n = s.size();
    std::vector<int> v(n);
    for (int i = 1; i <= n; ++i) v[i - 1] = s(t(i));
    return permutation(std::move(v));
}

permutation inverse(const permutation& s) {
    const int n = s.size();
    std::vector<int> v(n);
    for (int i = 1; i <= n; ++i) v[s(i) - 1] = i;
    return permutation(std::move(v));
}

long l1_distance(const inversion_vector& x, const inversion_vector& y) {
    require_same_n(x.n(), y.n());
    long d = 0;
    for (size_t i = 0; i < x.coords.size(); ++i) d += std::abs(x.coords[i] - y.coords[i]);
    return d;
}

long footrule(const permutation& s, const permutation& p) {
    require_same_n(s.size(), p.size());
    long d = 0;
    for (int i = 1; i <= s.size(); ++i) d += std::abs(s(i) - p(i));
    return d;
}

int cayley_distance(const permutation& s, const permutation& p) {
    require_same_n(s.size(), p.size());
    const permutation r = compose(s, inverse(p));
    const int n = r.size();
    std::vector<char> seen(n + 1, 0);
    int cycles = 0;
    for (int i = 1; i <= n; ++i) {
        if (seen[i]) continue;
        ++cycles;
        for (int j = i; !seen[j]; j = r(j)) seen[j] = 1;
    }
    return n - cycles;
}

hamming_image to_hamming_image(const permutation& s) {
    const int n = s.size();
    hamming_image a;
    a.n = n;
    a.bits.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            a.bits.push_back(s(i) > s(j) ? 1 : 0);
    return a;
}

int hamming_distance(const hamming_image& a, const hamming_image& b) {
    require_same_n(a.n, b.n);
    int d = 0;
    for (size_t i = 0; i < a.bits.size(); ++i)
        if (a.bits[i] != b.bits[i]) ++d;
    return d;
}

}  // namespace rankmod
