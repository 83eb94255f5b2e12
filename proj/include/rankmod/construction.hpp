#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rankmod/bigint.hpp"
#include "rankmod/permutation.hpp"

namespace rankmod {

// q+1 residues mod m = (q^{t+1}-1)/(q-1) whose t-element multiset sums are
// pairwise distinct mod m; sorted ascending with elements[0] == 0.
struct sidon_set {
    long q = 0;
    int t = 0;
    long m = 0;
    std::vector<long> elements;
};

// Check vector h over Z_{m_t}. m == 0 marks the t = 1 special path
// (h_i = i, m_t = 2n-1), which has no Bose-Chowla ancestry.
struct parity_check {
    int t = 0;
    long m = 0;
    long m_t = 0;
    std::vector<long> h;
};

struct rank_code {
    int n = 0;
    int t = 0;
    long q = 0;  // 0 for the t = 1 path
    long m = 0;
    std::vector<long> sidon;
    parity_check parity;
    long coset = 0;
    std::vector<permutation> codebook;  // lexicographic by inversion vector
    std::map<long, std::vector<int>> syndrome_table;
};

bool is_sidon(const std::vector<long>& elements, int t, long m);

sidon_set bose_chowla_set(long q, int t);

// Distinct candidate Sidon sets from successive primitive elements of
// GF(q^{t+1}) in ascending element order, each gated by is_sidon.
std::vector<sidon_set> bose_chowla_candidates(long q, int t, int max_distinct);

// Exhaustive fallback (m <= 200): lexicographically first Sidon set.
std::optional<std::vector<long>> exhaustive_sidon_search(long q, int t, long m);

parity_check lift_check(const sidon_set& J);

bool syndromes_distinct(const parity_check& pc, int L, int t);

parity_check shorten(const parity_check& pc, int L);

// Entry a = #{x in G_n : sum h_i x_i == a (mod m_t)}; length m_t.
std::vector<bigint> coset_profile(int n, const parity_check& pc);

rank_code build_code(int n, int t);

// sum h_i x_i - coset mod m_t, normalized to [0, m_t); zero on codewords.
long syndrome(const inversion_vector& x, const rank_code& code);

// Bounded-distance decoding; nullopt means "uncorrectable".
std::optional<permutation> decode(const permutation& received, const rank_code& code);

const permutation& codeword_index(const rank_code& code, long i);

// Exact pairwise minimum; n(n-1)/2 + 1 sentinel when fewer than 2 codewords.
long min_kendall_distance(const rank_code& code);
long min_l1_distance(const rank_code& code);

// |codebook| / (n! / |B_t|), the sphere-packing efficiency.
double packing_efficiency(const rank_code& code);

// Re-runs every structural gate (Sidon, syndromes, ranges, sum properties,
// coset membership, canonical order, size floor). Throws verification_error.
void check_gates(const rank_code& code);

std::string serialize_code(const rank_code& code);
rank_code parse_code(const std::string& text);  // gates re-run on load
void save_code(const rank_code& code, const std::string& path);
rank_code load_code(const std::string& path);

}  // namespace rankmod
