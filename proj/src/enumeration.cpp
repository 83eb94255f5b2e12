#include "rankmod/enumeration.hpp"

#include <algorithm>
#include <bitset>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "rankmod/errors.hpp"

namespace rankmod {

weight_distribution_t weight_distribution(int n) {
    if (n < 1) throw std::invalid_argument("weight_distribution requires n >= 1");
    // Coefficients of prod_{i=1}^{n} (1 + z + ... + z^{i-1}), grown one factor
    // at a time with a sliding window sum.
    std::vector<bigint> c{1};
    for (int i = 2; i <= n; ++i) {
        std::vector<bigint> next(c.size() + i - 1, 0);
        bigint window = 0;
        for (size_t k = 0; k < next.size(); ++k) {
            if (k < c.size()) window += c[k];
            if (k >= static_cast<size_t>(i) && k - i < c.size()) window -= c[k - i];
            next[k] = window;
        }
        c = std::move(next);
    }
    return weight_distribution_t{n, std::move(c)};
}

bigint kn_explicit(int n, int k) {
    if (n < 1) throw std::invalid_argument("kn_explicit requires n >= 1");
    if (k < 1 || k > n)
        throw std::invalid_argument("kn_explicit requires 1 <= k <= n, got k=" + std::to_string(k));
    bigint r = binomial(n + k - 2, k) - binomial(n + k - 3, k - 2);
    for (long j = 2;; ++j) {
        const long uj = (3 * j * j - j) / 2;
        if (uj > k) break;
        const bigint term = binomial(n + k - uj - 1, k - uj) + binomial(n + k - uj - j - 1, k - uj - j);
        r += (j % 2 == 0) ? term : -term;
    }
    return r;
}

bigint kendall_ball_volume(int n, long r) {
    if (n < 1 || r < 0) throw std::invalid_argument("kendall_ball_volume requires n >= 1, r >= 0");
    const weight_distribution_t w = weight_distribution(n);
    bigint total = 0;
    const long hi = std::min(r, w.N());
    for (long k = 0; k <= hi; ++k) total += w.counts[k];
    return total;
}

bigint q_count(int n, long r) {
    if (n < 1 || r < 0) throw std::invalid_argument("q_count requires n >= 1, r >= 0");
    bigint total = 0;
    for (long i = 0; i <= n && r - static_cast<long>(n) * i >= 0; ++i) {
        const bigint term = binomial(n, i) * binomial(n + r - n * i - 1, r - n * i);
        total += (i % 2 == 0) ? term : -term;
    }
    return total;
}

bigint h_ball_volume(int n, long s) {
    if (n < 1 || s < 0) throw std::invalid_argument("h_ball_volume requires n >= 1, s >= 0");
    const long hi = std::min(s, static_cast<long>(n) * (n - 1));
    bigint total = 0;
    for (long r = 0; r <= hi; ++r) total += q_count(n, r);
    return total;
}

std::pair<bigint, bigint> qnr_sandwich(int n, long r) {
    if (n < 1 || r < 0) throw std::invalid_argument("qnr_sandwich requires n >= 1, r >= 0");
    if (n > 1 && static_cast<double>(r) >= static_cast<double>(n) * n / std::log(static_cast<double>(n)))
        throw std::invalid_argument("qnr_sandwich requires r < n^2/ln n, got r=" + std::to_string(r));
    const bigint upper = binomial(n + r - 1, r);
    const bigint lower = upper - n * binomial(r - 1, r - n);
    return {lower, upper};
}

weight_distribution_t brute_weight_distribution(int n) {
    if (n < 1) throw std::invalid_argument("brute_weight_distribution requires n >= 1");
    if (n > 8) throw cap_exceeded("brute_weight_distribution capped at n <= 8, got n=" + std::to_string(n));
    std::vector<bigint> counts(static_cast<size_t>(n) * (n - 1) / 2 + 1, 0);
    for_each_permutation(n, [&](const permutation& s) { counts[inversion_count(s)] += 1; });
    return weight_distribution_t{n, std::move(counts)};
}

bigint brute_q_count(int n, long r) {
    if (n < 1 || r < 0) throw std::invalid_argument("brute_q_count requires n >= 1, r >= 0");
    if (n > 6) throw cap_exceeded("brute_q_count capped at n <= 6, got n=" + std::to_string(n));
    // Odometer over {0..n-1}^n.
    std::vector<int> x(n, 0);
    long sum = 0;
    bigint count = 0;
    for (;;) {
        if (sum == r) ++count;
        int i = 0;
        while (i < n && x[i] == n - 1) {
            sum -= x[i];
            x[i++] = 0;
        }
        if (i == n) break;
        ++x[i];
        ++sum;
    }
    return count;
}

bigint brute_kendall_ball_volume(int n, long r) {
    if (n < 1 || r < 0) throw std::invalid_argument("brute_kendall_ball_volume requires n >= 1, r >= 0");
    if (n > 7) throw cap_exceeded("brute_kendall_ball_volume capped at n <= 7, got n=" + std::to_string(n));
    bigint count = 0;
    for_each_permutation(n, [&](const permutation& s) {
        if (inversion_count(s) <= r) ++count;
    });
    return count;
}

void for_each_permutation(int n, const std::function<void(const permutation&)>& f) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    do {
        f(permutation(v));
    } while (std::next_permutation(v.begin(), v.end()));
}

namespace {

// Branch-and-bound maximum clique with greedy coloring bounds; vertices are
// pre-sorted by degree. Sized for n <= 5 (at most 120 vertices).
constexpr int kMaxVerts = 128;
using vset = std::bitset<kMaxVerts>;

struct clique_solver {
    int nv = 0;
    std::vector<vset> adj;
    int best = 0;

    void expand(int rsize, vset cand) {
        // Greedy coloring: classes are independent sets; a vertex in color
        // class c can extend the clique by at most c more vertices.
        std::vector<int> order, color;
        vset left = cand;
        int c = 0;
        while (left.any()) {
            ++c;
            vset cls = left;
            for (int v = 0; v < nv; ++v) {
                if (!cls[v]) continue;
                order.push_back(v);
                color.push_back(c);
                left[v] = false;
                cls &= ~adj[v];
                cls[v] = false;
            }
        }
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (rsize + color[i] <= best) return;
            const int v = order[i];
            if (rsize + 1 > best) best = rsize + 1;
            vset next = cand & adj[v];
            if (next.any()) expand(rsize + 1, next);
            cand[v] = false;
        }
    }
};

}  // namespace

bigint exact_optimal_size(int n, int d) {
    if (n < 1) throw std::invalid_argument("exact_optimal_size requires n >= 1");
    if (n > 5) throw cap_exceeded("exact_optimal_size capped at n <= 5, got n=" + std::to_string(n));
    const int N = n * (n - 1) / 2;
    if (d < 1 || d > std::max(N, 1))
        throw std::invalid_argument("exact_optimal_size requires 1 <= d <= N, got d=" + std::to_string(d));

    std::vector<permutation> verts;
    for_each_permutation(n, [&](const permutation& s) { verts.push_back(s); });
    const int nv = static_cast<int>(verts.size());

    std::vector<vset> adj(nv);
    std::vector<int> deg(nv, 0);
    for (int i = 0; i < nv; ++i)
        for (int j = i + 1; j < nv; ++j)
            if (kendall_distance(verts[i], verts[j]) >= d) {
                adj[i][j] = adj[j][i] = true;
                ++deg[i];
                ++deg[j];
            }

    std::vector<int> order(nv);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return deg[a] > deg[b]; });

    clique_solver solver;
    solver.nv = nv;
    solver.adj.resize(nv);
    for (int i = 0; i < nv; ++i)
        for (int j = 0; j < nv; ++j) solver.adj[i][j] = adj[order[i]][order[j]];

    // Greedy clique seeds the incumbent.
    {
        vset cand;
        for (int v = 0; v < nv; ++v) cand[v] = true;
        int size = 0;
        for (int v = 0; v < nv && cand.any(); ++v) {
            if (!cand[v]) continue;
            ++size;
            cand &= solver.adj[v];
        }
        solver.best = size;
    }

    vset all;
    for (int v = 0; v < nv; ++v) all[v] = true;
    solver.expand(0, all);
    return solver.best;
}

}  // namespace rankmod
