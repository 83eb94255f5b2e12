#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "rankmod/bigint.hpp"
#include "rankmod/permutation.hpp"

namespace rankmod {

// Exact counts K_n(0..N), N = n(n-1)/2, of permutations by inversion number.
struct weight_distribution_t {
    int n = 0;
    std::vector<bigint> counts;

    long N() const { return static_cast<long>(counts.size()) - 1; }
};

weight_distribution_t weight_distribution(int n);

// Closed form for K_n(k), valid for 1 <= k <= n.
bigint kn_explicit(int n, int k);

// |B_r| in the Kendall space X_n (any center, by right-invariance).
bigint kendall_ball_volume(int n, long r);

// Q(n,r): integer solutions of x_1+...+x_n = r with 0 <= x_i <= n-1.
bigint q_count(int n, long r);

// |B_s(1)| in H_n = {1..n}^n under l1: sum of Q(n,0..s).
bigint h_ball_volume(int n, long s);

// Closed-form bracket for Q(n,r); requires r < n^2/ln n.
std::pair<bigint, bigint> qnr_sandwich(int n, long r);

// Exhaustive oracles (capped; used by tests and the verify paths).
weight_distribution_t brute_weight_distribution(int n);  // n <= 8
bigint brute_q_count(int n, long r);                     // n <= 6
bigint brute_kendall_ball_volume(int n, long r);         // n <= 7

// Exact A(n,d) via branch-and-bound maximum clique on S_n; n <= 5.
bigint exact_optimal_size(int n, int d);

// Visit all of S_n in lexicographic order.
void for_each_permutation(int n, const std::function<void(const permutation&)>& f);

}  // namespace rankmod
