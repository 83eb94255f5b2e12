#include "rankmod/cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "rankmod/bounds.hpp"
#include "rankmod/construction.hpp"
#include "rankmod/enumeration.hpp"
#include "rankmod/errors.hpp"
#include "rankmod/permutation.hpp"

namespace rankmod {

namespace {

// Both modes print one key per line in a fixed order; structured mode is the
// machine-stable "key=value" form, text mode pads with spaces for reading.
struct emitter {
    std::ostream& out;
    bool structured;

    void kv(const std::string& key, const std::string& value) const {
        out << key << (structured ? "=" : " = ") << value << "\n";
    }
};

std::string fixed6(double v) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(6);
    os << v;
    return os.str();
}

// Built codes with at most this many words get an exhaustive pairwise
// minimum-distance recheck in construct/verify.
constexpr size_t kMinDistCheckCap = 2000;

void emit_code_summary(const emitter& em, const rank_code& code) {
    em.kv("n", std::to_string(code.n));
    em.kv("t", std::to_string(code.t));
    em.kv("q", std::to_string(code.q));
    em.kv("m", std::to_string(code.m));
    em.kv("mt", std::to_string(code.parity.m_t));
    em.kv("coset", std::to_string(code.coset));
    em.kv("size", std::to_string(code.codebook.size()));
    em.kv("efficiency", fixed6(packing_efficiency(code)));
}

long checked_min_distance(const rank_code& code) {
    const long md = min_kendall_distance(code);
    if (code.codebook.size() >= 2 && md < 2 * code.t + 1)
        throw verification_error("minimum Kendall distance " + std::to_string(md) + " is below 2t+1 = " +
                                 std::to_string(2 * code.t + 1));
    return md;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"rank-modulation (Kendall tau) permutation codes toolkit"};
    app.require_subcommand(1);

    std::string format = "text";
    const auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "structured"}));
    };

    int n = 0, d = 0, t = 0;
    long k = 0, r = 0;
    std::string p1, p2, operand, kind = "kn", out_path, path, received;
    bool from_vector = false;

    auto* dist = app.add_subcommand("dist", "distances between two permutations");
    dist->add_option("p1", p1, "first permutation, e.g. 2,1,4,3")->required();
    dist->add_option("p2", p2, "second permutation")->required();
    add_format(dist);
    dist->callback([&] {
        const permutation a = permutation::parse(p1);
        const permutation b = permutation::parse(p2);
        if (a.size() != b.size())
            throw std::invalid_argument("permutations differ in size: " + std::to_string(a.size()) +
                                        " vs " + std::to_string(b.size()));
        const emitter em{out, format == "structured"};
        em.kv("kendall", std::to_string(kendall_distance(a, b)));
        // G_1 is the empty product, so the l1 distance on S_1 is 0.
        const long l1 = a.size() < 2 ? 0 : l1_distance(to_inversion_vector(a), to_inversion_vector(b));
        em.kv("l1", std::to_string(l1));
        em.kv("footrule", std::to_string(footrule(a, b)));
        em.kv("cayley", std::to_string(cayley_distance(a, b)));
    });

    auto* invvec = app.add_subcommand("invvec", "convert permutation <-> inversion vector");
    invvec->add_option("value", operand, "permutation (or vector with --from-vector)")->required();
    invvec->add_flag("--from-vector", from_vector, "input is an inversion vector");
    add_format(invvec);
    invvec->callback([&] {
        const emitter em{out, format == "structured"};
        if (from_vector)
            em.kv("perm", from_inversion_vector(inversion_vector::parse(operand)).str());
        else
            em.kv("invvec", to_inversion_vector(permutation::parse(operand)).str());
    });

    auto* volume = app.add_subcommand("volume", "enumeration counts K_n(k) / |B_r| / Q(n,r) / |B_r(H_n)|");
    volume->add_option("kind", kind, "kn | ball | q | hball (default kn)")
        ->check(CLI::IsMember({"kn", "ball", "q", "hball"}));
    volume->add_option("--n", n, "ambient size n")->required();
    volume->add_option("--k", k, "inversion count for kind kn");
    volume->add_option("--r", r, "radius for kinds ball, q, hball");
    add_format(volume);
    volume->callback([&] {
        if (n < 1) throw std::invalid_argument("--n must be >= 1");
        const emitter em{out, format == "structured"};
        em.kv("n", std::to_string(n));
        bigint value;
        if (kind == "kn") {
            if (volume->count("--k") == 0) throw std::invalid_argument("volume kn requires --k");
            if (k < 0) throw std::invalid_argument("--k must be >= 0");
            const weight_distribution_t w = weight_distribution(n);
            value = k <= w.N() ? w.counts[k] : 0;
            em.kv("k", std::to_string(k));
        } else {
            if (volume->count("--r") == 0) throw std::invalid_argument("volume " + kind + " requires --r");
            if (r < 0) throw std::invalid_argument("--r must be >= 0");
            if (kind == "ball")
                value = kendall_ball_volume(n, r);
            else if (kind == "q")
                value = q_count(n, r);
            else
                value = h_ball_volume(n, r);
            em.kv("r", std::to_string(r));
        }
        em.kv("value", value.str());
    });

    auto* bounds = app.add_subcommand("bounds", "upper/lower bounds on A(n,d)");
    bounds->add_option("--n", n, "permutation size")->required();
    bounds->add_option("--d", d, "minimum Kendall distance")->required();
    add_format(bounds);
    bounds->callback([&] {
        const emitter em{out, format == "structured"};
        for (const auto& [key, value] : report_keyvalues(make_bounds_report(n, d))) em.kv(key, value);
    });

    auto* construct = app.add_subcommand("construct", "build a t-error-correcting code in S_n");
    construct->add_option("--n", n, "permutation size (4..12)")->required();
    construct->add_option("--t", t, "correction radius (>= 1)")->required();
    construct->add_option("--out", out_path, "write the codebook file here");
    add_format(construct);
    construct->callback([&] {
        if (n < 4 || n > 12) throw std::invalid_argument("construct requires 4 <= n <= 12");
        if (t < 1) throw std::invalid_argument("--t must be >= 1");
        const rank_code code = build_code(n, t);
        const bool check = code.codebook.size() <= kMinDistCheckCap;
        const long md = check ? checked_min_distance(code) : 0;
        if (!out_path.empty()) save_code(code, out_path);
        const emitter em{out, format == "structured"};
        emit_code_summary(em, code);
        em.kv("min_distance_checked", check ? "true" : "false");
        if (check) em.kv("min_distance", std::to_string(md));
        if (!out_path.empty()) em.kv("file", out_path);
    });

    auto* verify = app.add_subcommand("verify", "reload a codebook file and rerun every gate");
    verify->add_option("file", path, "codebook file")->required();
    add_format(verify);
    verify->callback([&] {
        const rank_code code = load_code(path);  // structural gates run on load
        const bool check = code.codebook.size() <= kMinDistCheckCap;
        const long md = check ? checked_min_distance(code) : 0;
        const emitter em{out, format == "structured"};
        emit_code_summary(em, code);
        em.kv("min_distance_checked", check ? "true" : "false");
        if (check) em.kv("min_distance", std::to_string(md));
        em.kv("verified", "true");
    });

    auto* dec = app.add_subcommand("decode", "bounded-distance decode a received permutation");
    dec->add_option("file", path, "codebook file")->required();
    dec->add_option("received", received, "received permutation")->required();
    add_format(dec);
    dec->callback([&] {
        const rank_code code = load_code(path);
        const permutation y = permutation::parse(received);
        if (y.size() != code.n)
            throw std::invalid_argument("received permutation has size " + std::to_string(y.size()) +
                                        ", code has n=" + std::to_string(code.n));
        const emitter em{out, format == "structured"};
        em.kv("syndrome", std::to_string(syndrome(to_inversion_vector(y), code)));
        const auto word = decode(y, code);
        em.kv("decoded", word ? word->str() : "uncorrectable");
    });

    auto* optimal = app.add_subcommand("optimal", "exact A(n,d) by exhaustive clique search");
    optimal->add_option("--n", n, "permutation size (<= 5)")->required();
    optimal->add_option("--d", d, "minimum Kendall distance")->required();
    add_format(optimal);
    optimal->callback([&] {
        if (n < 1 || n > 5) throw std::invalid_argument("optimal requires 1 <= n <= 5");
        const bigint value = exact_optimal_size(n, d);
        const emitter em{out, format == "structured"};
        em.kv("n", std::to_string(n));
        em.kv("d", std::to_string(d));
        em.kv("value", value.str());
    });

    try {
        std::reverse(args.begin(), args.end());  // CLI11 consumes a reversed vector
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    } catch (const cap_exceeded& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const verification_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace rankmod
