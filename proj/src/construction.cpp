#include "rankmod/construction.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "rankmod/enumeration.hpp"
#include "rankmod/errors.hpp"
#include "rankmod/field.hpp"

namespace rankmod {

namespace {

long mod_norm(long long v, long m) {
    long r = static_cast<long>(v % m);
    return r < 0 ? r + m : r;
}

long modinv(long a, long m) {
    long g = m, x = 0, x1 = 1, a1 = a;
    while (a1 != 0) {
        const long qd = g / a1;
        g -= qd * a1;
        std::swap(g, a1);
        x -= qd * x1;
        std::swap(x, x1);
    }
    return mod_norm(x, m);
}

void collect_t_sums(const std::vector<long>& el, int t, long m, size_t start, long acc,
                    std::vector<long>& out) {
    if (t == 0) {
        out.push_back(acc);
        return;
    }
    for (size_t i = start; i < el.size(); ++i)
        collect_t_sums(el, t - 1, m, i, mod_norm(static_cast<long long>(acc) + el[i], m), out);
}

bool all_distinct(std::vector<long>& v) {
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end();
}

}  // namespace

bool is_sidon(const std::vector<long>& elements, int t, long m) {
    if (t < 1 || m < 1) throw std::invalid_argument("is_sidon requires t >= 1, m >= 1");
    std::vector<long> sorted = elements;
    std::sort(sorted.begin(), sorted.end());
    for (const long e : sorted)
        if (e < 0 || e >= m)
            throw std::invalid_argument("is_sidon: element " + std::to_string(e) + " not a residue mod " +
                                        std::to_string(m));
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("is_sidon: elements must be distinct");
    std::vector<long> sums;
    collect_t_sums(sorted, t, m, 0, 0, sums);
    return all_distinct(sums);
}

std::vector<sidon_set> bose_chowla_candidates(long q, int t, int max_distinct) {
    if (t < 1) throw std::invalid_argument("bose_chowla_candidates requires t >= 1");
    const auto pe = finite_field::prime_power(q);
    if (!pe) throw std::invalid_argument("q=" + std::to_string(q) + " is not a prime power");
    const finite_field F(pe->first, pe->second * (t + 1));
    const long Q = F.q();
    const long m = (Q - 1) / (q - 1);

    // The unique subfield GF(q): zero plus the order-(q-1) subgroup.
    std::vector<long> subfield{0};
    for (long k = 0; k < q - 1; ++k) subfield.push_back(F.antilog(k * m));

    std::vector<sidon_set> out;
    std::set<std::vector<long>> seen;
    for (long x = 2; x < Q && static_cast<int>(out.size()) < max_distinct; ++x) {
        const long u = F.log(x);
        if (std::gcd(u, Q - 1) != 1) continue;  // x must be primitive
        const long uinv = modinv(u, Q - 1);
        std::set<long> js{0};
        for (const long s : subfield) {
            const long y = F.add(x, s);  // theta + a, never zero and never in GF(q)
            js.insert(mod_norm(static_cast<long long>(uinv) * F.log(y), Q - 1) % m);
        }
        if (static_cast<long>(js.size()) != q + 1) continue;
        std::vector<long> el(js.begin(), js.end());
        if (!seen.insert(el).second) continue;
        if (!is_sidon(el, t, m)) continue;
        out.push_back(sidon_set{q, t, m, std::move(el)});
    }
    return out;
}

std::optional<std::vector<long>> exhaustive_sidon_search(long q, int t, long m) {
    if (m > 200) throw cap_exceeded("exhaustive_sidon_search capped at m <= 200");
    std::vector<long> el{0};
    std::function<bool()> dfs = [&]() -> bool {
        if (static_cast<long>(el.size()) == q + 1) return true;
        for (long v = el.back() + 1; v < m; ++v) {
            el.push_back(v);
            std::vector<long> sums;
            collect_t_sums(el, t, m, 0, 0, sums);
            if (all_distinct(sums) && dfs()) return true;
            el.pop_back();
        }
        return false;
    };
    if (dfs()) return el;
    return std::nullopt;
}

sidon_set bose_chowla_set(long q, int t) {
    auto cands = bose_chowla_candidates(q, t, 1);
    if (!cands.empty()) return std::move(cands.front());
    long pw = 1;
    for (int i = 0; i <= t; ++i) pw *= q;
    const long m = (pw - 1) / (q - 1);
    if (m <= 200) {
        auto el = exhaustive_sidon_search(q, t, m);
        if (el && is_sidon(*el, t, m)) return sidon_set{q, t, m, std::move(*el)};
    }
    throw verification_error("bose_chowla_set: no valid Sidon set found (implementation bug)");
}

parity_check lift_check(const sidon_set& J) {
    if (J.t < 2) throw std::invalid_argument("lift_check requires t >= 2 (t = 1 uses the special path)");
    if (J.m < 1 || J.elements.empty() || J.elements.front() != 0)
        throw std::invalid_argument("lift_check: malformed Sidon set");
    const long shift = (J.t % 2 == 1) ? (J.t - 1) / 2 * J.m : J.t / 2 * J.m;
    parity_check pc;
    pc.t = J.t;
    pc.m = J.m;
    pc.m_t = (J.t % 2 == 1) ? static_cast<long>(J.t) * (J.t + 1) * J.m
                            : static_cast<long>(J.t) * (J.t + 2) * J.m;
    pc.h.reserve(J.elements.size());
    for (const long j : J.elements) pc.h.push_back(j + shift);
    for (const long hi : pc.h) {
        const bool ok = (J.t % 2 == 1) ? ((J.t - 1) * J.m / 2 <= hi && hi < (J.t + 1) * J.m / 2)
                                       : (J.t * J.m / 2 <= hi && hi <= (J.t + 2) * J.m / 2);
        if (!ok || hi <= 0 || hi >= pc.m_t)
            throw verification_error("lift_check: shifted coefficient " + std::to_string(hi) +
                                     " outside its admissible range");
    }
    if (!syndromes_distinct(pc, static_cast<int>(pc.h.size()), pc.t))
        throw verification_error("lift_check: distinct-syndrome verification failed");
    return pc;
}

namespace {

void collect_syndromes(const std::vector<long>& h, long m_t, int idx, int L, int budget, long acc,
                       std::vector<long>& out) {
    if (idx == L) {
        out.push_back(acc);
        return;
    }
    // e_idx = 0 first, then +/-v for each remaining-weight v.
    collect_syndromes(h, m_t, idx + 1, L, budget, acc, out);
    for (int v = 1; v <= budget; ++v) {
        collect_syndromes(h, m_t, idx + 1, L, budget - v,
                          mod_norm(acc + static_cast<long long>(h[idx]) * v, m_t), out);
        collect_syndromes(h, m_t, idx + 1, L, budget - v,
                          mod_norm(acc - static_cast<long long>(h[idx]) * v, m_t), out);
    }
}

}  // namespace

bool syndromes_distinct(const parity_check& pc, int L, int t) {
    if (L < 0 || L > static_cast<int>(pc.h.size()))
        throw std::invalid_argument("syndromes_distinct: L out of range");
    if (pc.m_t < 1) throw std::invalid_argument("syndromes_distinct: m_t must be positive");
    std::vector<long> syn;
    collect_syndromes(pc.h, pc.m_t, 0, L, t, 0, syn);
    return all_distinct(syn);
}

parity_check shorten(const parity_check& pc, int L) {
    if (L < 0 || L > static_cast<int>(pc.h.size()))
        throw std::invalid_argument("shorten: L out of range");
    parity_check out{pc.t, pc.m, pc.m_t, std::vector<long>(pc.h.begin(), pc.h.begin() + L)};
    if (!syndromes_distinct(out, L, out.t))
        throw verification_error("shorten: distinct-syndrome verification failed after truncation");
    return out;
}

std::vector<bigint> coset_profile(int n, const parity_check& pc) {
    if (static_cast<int>(pc.h.size()) != n - 1)
        throw std::invalid_argument("coset_profile: parity length must equal n-1");
    std::vector<bigint> cur(pc.m_t, 0), next(pc.m_t, 0);
    cur[0] = 1;
    for (int i = 1; i <= n - 1; ++i) {
        std::fill(next.begin(), next.end(), 0);
        const long base = mod_norm(pc.h[i - 1], pc.m_t);
        for (long r = 0; r < pc.m_t; ++r) {
            if (cur[r] == 0) continue;
            long s = r;
            for (int v = 0; v <= i; ++v) {
                next[s] += cur[r];
                s += base;
                if (s >= pc.m_t) s -= pc.m_t;
            }
        }
        std::swap(cur, next);
    }
    return cur;
}

namespace {

// uint64 twin of coset_profile, for build-time scoring (n <= 20 keeps n! in range).
std::vector<std::uint64_t> profile_u64(int n, const parity_check& pc) {
    std::vector<std::uint64_t> cur(pc.m_t, 0), next(pc.m_t, 0);
    cur[0] = 1;
    for (int i = 1; i <= n - 1; ++i) {
        std::fill(next.begin(), next.end(), 0);
        const long base = mod_norm(pc.h[i - 1], pc.m_t);
        for (long r = 0; r < pc.m_t; ++r) {
            if (cur[r] == 0) continue;
            long s = r;
            for (int v = 0; v <= i; ++v) {
                next[s] += cur[r];
                s += base;
                if (s >= pc.m_t) s -= pc.m_t;
            }
        }
        std::swap(cur, next);
    }
    return cur;
}

std::map<long, std::vector<int>> build_syndrome_table(const parity_check& pc, int L, int t) {
    std::map<long, std::vector<int>> table;
    std::vector<int> e(L, 0);
    std::function<void(int, int, long)> rec = [&](int idx, int budget, long acc) {
        if (idx == L) {
            if (!table.emplace(acc, e).second)
                throw verification_error("syndrome table collision (gate should have caught this)");
            return;
        }
        rec(idx + 1, budget, acc);
        for (int v = 1; v <= budget; ++v) {
            e[idx] = v;
            rec(idx + 1, budget - v, mod_norm(acc + static_cast<long long>(pc.h[idx]) * v, pc.m_t));
            e[idx] = -v;
            rec(idx + 1, budget - v, mod_norm(acc - static_cast<long long>(pc.h[idx]) * v, pc.m_t));
            e[idx] = 0;
        }
    };
    rec(0, t, 0);
    return table;
}

void enumerate_codebook(rank_code& code) {
    const int L = code.n - 1;
    const long mt = code.parity.m_t;
    const auto& h = code.parity.h;
    // reach[j][s] == 1 iff coordinates j..L-1 can contribute sum s (mod m_t).
    std::vector<std::vector<std::uint8_t>> reach(L + 1, std::vector<std::uint8_t>(mt, 0));
    reach[L][0] = 1;
    for (int j = L - 1; j >= 0; --j) {
        const long base = mod_norm(h[j], mt);
        for (long r = 0; r < mt; ++r) {
            if (!reach[j + 1][r]) continue;
            long s = r;
            for (int v = 0; v <= j + 1; ++v) {
                reach[j][s] = 1;
                s += base;
                if (s >= mt) s -= mt;
            }
        }
    }
    inversion_vector x;
    x.coords.assign(L, 0);
    std::function<void(int, long)> walk = [&](int j, long rem) {
        if (j == L) {
            code.codebook.push_back(from_inversion_vector(x));
            return;
        }
        const long base = mod_norm(h[j], mt);
        long target = rem;
        for (int v = 0; v <= j + 1; ++v) {
            if (reach[j + 1][target]) {
                x.coords[j] = v;
                walk(j + 1, target);
            }
            target -= base;
            if (target < 0) target += mt;
        }
        x.coords[j] = 0;
    };
    walk(0, code.coset);
}

}  // namespace

rank_code build_code(int n, int t) {
    if (n < 4) throw std::invalid_argument("build_code requires n >= 4");
    if (t < 1) throw std::invalid_argument("build_code requires t >= 1");
    if (n > 20) throw cap_exceeded("build_code supports n <= 20, got n=" + std::to_string(n));

    rank_code code;
    code.n = n;
    code.t = t;

    if (t == 1) {
        // The Sidon-set shift degenerates at t = 1 (h_1 would be 0); use the
        // classic h_i = i check with modulus 2n-1 instead.
        code.q = 0;
        code.m = 0;
        code.parity.t = 1;
        code.parity.m = 0;
        code.parity.m_t = 2L * n - 1;
        for (int i = 1; i <= n - 1; ++i) code.parity.h.push_back(i);
        if (!syndromes_distinct(code.parity, n - 1, 1))
            throw verification_error("build_code: t=1 check failed distinct-syndrome verification");
    } else {
        long q = std::max(2, n - 2);
        while (!finite_field::prime_power(q)) ++q;
        code.q = q;

        // Any verified Sidon set gives the same guarantees; sweep the distinct
        // candidates (work-budgeted) and keep the one with the fullest coset.
        const auto cands = bose_chowla_candidates(q, t, 64);
        if (cands.empty()) throw verification_error("build_code: no Sidon candidates (implementation bug)");
        long long work = 0;
        const long long work_budget = 200'000'000;
        std::uint64_t best_count = 0;
        for (const auto& J : cands) {
            const parity_check pc = shorten(lift_check(J), n - 1);
            const auto prof = profile_u64(n, pc);
            const std::uint64_t mx = *std::max_element(prof.begin(), prof.end());
            if (mx > best_count) {
                best_count = mx;
                code.sidon = J.elements;
                code.m = J.m;
                code.parity = pc;
            }
            work += static_cast<long long>(pc.m_t) * (static_cast<long long>(n) * (n + 1) / 2);
            if (work > work_budget) break;
        }
    }

    const auto prof = profile_u64(n, code.parity);
    std::uint64_t best = 0;
    long coset = 0;
    for (long a = 0; a < code.parity.m_t; ++a)
        if (prof[a] > best) {
            best = prof[a];
            coset = a;
        }
    code.coset = coset;

    if (best > 1'000'000)
        throw cap_exceeded("build_code: codebook size cap 10^6 exceeded, coset holds " + std::to_string(best));

    code.codebook.reserve(best);
    enumerate_codebook(code);
    if (code.codebook.size() != best)
        throw verification_error("build_code: codebook enumeration disagrees with the coset profile");

    code.syndrome_table = build_syndrome_table(code.parity, n - 1, t);
    check_gates(code);
    return code;
}

long syndrome(const inversion_vector& x, const rank_code& code) {
    if (x.n() != code.n)
        throw std::invalid_argument("syndrome: inversion vector length mismatch");
    long long acc = 0;
    for (int i = 0; i < code.n - 1; ++i)
        acc = (acc + static_cast<long long>(code.parity.h[i]) * x.coords[i]) % code.parity.m_t;
    return mod_norm(acc - code.coset, code.parity.m_t);
}

std::optional<permutation> decode(const permutation& received, const rank_code& code) {
    if (received.size() != code.n)
        throw std::invalid_argument("decode: received permutation has wrong size");
    const inversion_vector y = to_inversion_vector(received);
    const auto it = code.syndrome_table.find(syndrome(y, code));
    if (it == code.syndrome_table.end()) return std::nullopt;
    inversion_vector x = y;
    for (int i = 0; i < code.n - 1; ++i) {
        x.coords[i] -= it->second[i];
        if (x.coords[i] < 0 || x.coords[i] > i + 1) return std::nullopt;
    }
    return from_inversion_vector(x);
}

const permutation& codeword_index(const rank_code& code, long i) {
    if (i < 0 || i >= static_cast<long>(code.codebook.size()))
        throw std::invalid_argument("codeword_index: index " + std::to_string(i) + " out of range");
    return code.codebook[i];
}

long min_kendall_distance(const rank_code& code) {
    const long sentinel = static_cast<long>(code.n) * (code.n - 1) / 2 + 1;
    if (code.codebook.size() < 2) return sentinel;
    long best = sentinel;
    for (size_t i = 0; i < code.codebook.size(); ++i)
        for (size_t j = i + 1; j < code.codebook.size(); ++j) {
            const long d = kendall_distance(code.codebook[i], code.codebook[j]);
            if (d < best) best = d;
        }
    return best;
}

long min_l1_distance(const rank_code& code) {
    const long sentinel = static_cast<long>(code.n) * (code.n - 1) / 2 + 1;
    if (code.codebook.size() < 2) return sentinel;
    std::vector<inversion_vector> xs;
    xs.reserve(code.codebook.size());
    for (const auto& c : code.codebook) xs.push_back(to_inversion_vector(c));
    long best = sentinel;
    for (size_t i = 0; i < xs.size(); ++i)
        for (size_t j = i + 1; j < xs.size(); ++j) {
            const long d = l1_distance(xs[i], xs[j]);
            if (d < best) best = d;
        }
    return best;
}

double packing_efficiency(const rank_code& code) {
    const bigrat eff = bigrat(bigint(code.codebook.size()) * kendall_ball_volume(code.n, code.t),
                              factorial(code.n));
    return eff.convert_to<double>();
}

void check_gates(const rank_code& code) {
    const int n = code.n, t = code.t;
    if (n < 2 || t < 1) throw verification_error("gate: malformed code header");
    const auto& pc = code.parity;
    if (pc.t != t || static_cast<int>(pc.h.size()) != n - 1)
        throw verification_error("gate: parity check shape mismatch");

    if (code.m == 0) {
        if (t != 1 || code.q != 0 || !code.sidon.empty() || pc.m != 0)
            throw verification_error("gate: the m=0 form is reserved for the t=1 path");
        if (pc.m_t != 2L * n - 1) throw verification_error("gate: t=1 path requires m_t = 2n-1");
        for (int i = 1; i <= n - 1; ++i)
            if (pc.h[i - 1] != i) throw verification_error("gate: t=1 path requires h_i = i");
    } else {
        if (t < 2) throw verification_error("gate: lifted checks require t >= 2");
        if (!finite_field::prime_power(code.q)) throw verification_error("gate: q is not a prime power");
        bigint pw = 1;
        for (int i = 0; i <= t; ++i) pw *= code.q;
        if (bigint(code.m) * (code.q - 1) != pw - 1)
            throw verification_error("gate: m != (q^{t+1}-1)/(q-1)");
        if (static_cast<long>(code.sidon.size()) != code.q + 1)
            throw verification_error("gate: Sidon set must have q+1 elements");
        if (!std::is_sorted(code.sidon.begin(), code.sidon.end()) || code.sidon.front() != 0)
            throw verification_error("gate: Sidon set must be sorted with j_0 = 0");
        if (!is_sidon(code.sidon, t, code.m)) throw verification_error("gate: is_sidon failed");
        const long expect_mt = (t % 2 == 1) ? static_cast<long>(t) * (t + 1) * code.m
                                            : static_cast<long>(t) * (t + 2) * code.m;
        if (pc.m_t != expect_mt) throw verification_error("gate: m_t does not match t and m");
        const long shift = (t % 2 == 1) ? (t - 1) / 2 * code.m : t / 2 * code.m;
        for (int i = 0; i < n - 1; ++i) {
            if (pc.h[i] != code.sidon[i] + shift)
                throw verification_error("gate: h is not the shifted Sidon prefix");
            const long hi = pc.h[i];
            const bool ok = (t % 2 == 1)
                                ? ((t - 1) * code.m / 2 <= hi && hi < (t + 1) * code.m / 2)
                                : (t * code.m / 2 <= hi && hi <= (t + 2) * code.m / 2);
            if (!ok) throw verification_error("gate: h_i range violation");
        }
    }

    for (const long hi : pc.h)
        if (hi <= 0 || hi >= pc.m_t) throw verification_error("gate: h_i must satisfy 0 < h_i < m_t");

    if (!syndromes_distinct(pc, n - 1, t))
        throw verification_error("gate: syndromes_distinct failed");

    // Proof-step sum properties on H = {0} union h: (ii) any 2t elements
    // (with repetition) sum below m_t; (iii) r largest < 2t-r smallest.
    const long hmax = *std::max_element(pc.h.begin(), pc.h.end());
    const long hmin = *std::min_element(pc.h.begin(), pc.h.end());
    if (2LL * t * hmax >= pc.m_t) throw verification_error("gate: sum property (ii) violated");
    for (int r = 1; r < t; ++r)
        if (static_cast<long long>(r) * hmax >= static_cast<long long>(2 * t - r) * hmin)
            throw verification_error("gate: sum property (iii) violated");

    if (code.coset < 0 || code.coset >= pc.m_t) throw verification_error("gate: coset out of range");
    if (code.codebook.empty()) throw verification_error("gate: empty codebook");

    const inversion_vector* prev = nullptr;
    inversion_vector prev_x;
    for (const auto& c : code.codebook) {
        if (c.size() != n) throw verification_error("gate: codeword size mismatch");
        const inversion_vector x = to_inversion_vector(c);
        if (syndrome(x, code) != 0)
            throw verification_error("gate: codeword " + c.str() + " violates the check equation");
        if (prev && !(prev_x < x))
            throw verification_error("gate: codebook not in canonical inversion-vector order");
        prev_x = x;
        prev = &prev_x;
    }

    if (bigint(code.codebook.size()) < ceil_div(factorial(n), bigint(pc.m_t)))
        throw verification_error("gate: codebook below the n!/m_t floor");
}

std::string serialize_code(const rank_code& code) {
    std::ostringstream os;
    os << "rankmod-codebook v1\n";
    os << "n=" << code.n << "\n";
    os << "t=" << code.t << "\n";
    os << "q=" << code.q << "\n";
    os << "m=" << code.m << "\n";
    os << "mt=" << code.parity.m_t << "\n";
    os << "sidon=";
    for (size_t i = 0; i < code.sidon.size(); ++i) os << (i ? "," : "") << code.sidon[i];
    os << "\n";
    os << "h=";
    for (size_t i = 0; i < code.parity.h.size(); ++i) os << (i ? "," : "") << code.parity.h[i];
    os << "\n";
    os << "coset=" << code.coset << "\n";
    os << "size=" << code.codebook.size() << "\n";
    for (const auto& c : code.codebook) os << c.str() << "\n";
    return os.str();
}

namespace {

std::string expect_field(std::istream& in, const std::string& key) {
    std::string line;
    if (!std::getline(in, line) || line.rfind(key + "=", 0) != 0)
        throw verification_error("codebook file: expected '" + key + "=' line");
    return line.substr(key.size() + 1);
}

std::vector<long> parse_long_list(const std::string& s) {
    std::vector<long> out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            size_t used = 0;
            out.push_back(std::stol(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw verification_error("codebook file: malformed integer '" + tok + "'");
        }
    }
    return out;
}

long parse_long(const std::string& s) {
    const auto v = parse_long_list(s);
    if (v.size() != 1) throw verification_error("codebook file: expected a single integer, got '" + s + "'");
    return v[0];
}

}  // namespace

rank_code parse_code(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "rankmod-codebook v1")
        throw verification_error("codebook file: bad header line");
    rank_code code;
    code.n = static_cast<int>(parse_long(expect_field(in, "n")));
    code.t = static_cast<int>(parse_long(expect_field(in, "t")));
    code.q = parse_long(expect_field(in, "q"));
    code.m = parse_long(expect_field(in, "m"));
    code.parity.t = code.t;
    code.parity.m = code.m;
    code.parity.m_t = parse_long(expect_field(in, "mt"));
    code.sidon = parse_long_list(expect_field(in, "sidon"));
    code.parity.h = parse_long_list(expect_field(in, "h"));
    code.coset = parse_long(expect_field(in, "coset"));
    const long size = parse_long(expect_field(in, "size"));
    if (size < 0) throw verification_error("codebook file: negative size");
    for (long i = 0; i < size; ++i) {
        if (!std::getline(in, line)) throw verification_error("codebook file: truncated codeword list");
        try {
            code.codebook.push_back(permutation::parse(line));
        } catch (const std::invalid_argument& ex) {
            throw verification_error(std::string("codebook file: bad codeword: ") + ex.what());
        }
    }
    while (std::getline(in, line))
        if (!line.empty()) throw verification_error("codebook file: trailing content");
    check_gates(code);
    code.syndrome_table = build_syndrome_table(code.parity, code.n - 1, code.t);
    return code;
}

void save_code(const rank_code& code, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open for writing: " + path);
    out << serialize_code(code);
    if (!out) throw std::invalid_argument("write failed: " + path);
}

rank_code load_code(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_code(ss.str());
}

}  // namespace rankmod
