#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "rankmod/cli.hpp"
#include "rankmod/construction.hpp"
#include "rankmod/permutation.hpp"

using namespace rankmod;

namespace {

struct cli_result {
    int code = -1;
    std::string out;
    std::string err;
};

cli_result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& s) {
    std::vector<std::string> lines;
    std::istringstream in(s);
    std::string cur;
    while (std::getline(in, cur)) lines.push_back(cur);
    return lines;
}

bool has_line(const std::string& s, const std::string& line) {
    for (const auto& l : lines_of(s))
        if (l == line) return true;
    return false;
}

// Swap the values k and k+1 in a comma-rendered permutation.
std::string swapped_words(const std::string& text, int k) {
    const permutation p = permutation::parse(text);
    std::vector<int> v = p.entries();
    for (auto& x : v) {
        if (x == k) x = k + 1;
        else if (x == k + 1) x = k;
    }
    return permutation(v).str();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("dist: golden structured output and text mode") {
    const auto r = run({"dist", "2,1,4,3", "2,3,4,1", "--format", "structured"});
    CHECK(r.code == 0);
    CHECK(r.out == "kendall=3\nl1=3\nfootrule=4\ncayley=1\n");
    CHECK(r.err.empty());

    const auto t = run({"dist", "2,1,4,3", "2,3,4,1"});
    CHECK(t.code == 0);
    CHECK(lines_of(t.out).at(0) == "kendall = 3");

    const auto z = run({"dist", "1,2,3", "1,2,3", "--format", "structured"});
    CHECK(z.out == "kendall=0\nl1=0\nfootrule=0\ncayley=0\n");

    const auto one = run({"dist", "1", "1", "--format", "structured"});
    CHECK(one.code == 0);
    CHECK(has_line(one.out, "l1=0"));
}

TEST_CASE("dist: rejects mismatched or malformed input") {
    const auto r = run({"dist", "1,2,3", "1,2"});
    CHECK(r.code == 1);
    CHECK(!r.err.empty());
    CHECK(run({"dist", "1,2,x", "1,2,3"}).code == 1);
    CHECK(run({"dist", "1,1,2", "1,2,3"}).code == 1);
}

TEST_CASE("invvec: both directions") {
    const auto a = run({"invvec", "2,1,4,3", "--format", "structured"});
    CHECK(a.code == 0);
    CHECK(a.out == "invvec=1,0,1\n");

    const auto b = run({"invvec", "1,0,1", "--from-vector", "--format", "structured"});
    CHECK(b.code == 0);
    CHECK(b.out == "perm=2,1,4,3\n");

    CHECK(run({"invvec", "9,9", "--from-vector"}).code == 1);
    CHECK(run({"invvec", "3,3,1"}).code == 1);
}

TEST_CASE("volume: all four kinds") {
    CHECK(run({"volume", "kn", "--n", "4", "--k", "2", "--format", "structured"}).out ==
          "n=4\nk=2\nvalue=5\n");
    CHECK(has_line(run({"volume", "--n", "5", "--k", "2", "--format", "structured"}).out,
                   "value=9"));  // kind defaults to kn
    CHECK(has_line(run({"volume", "kn", "--n", "3", "--k", "50", "--format", "structured"}).out,
                   "value=0"));
    CHECK(run({"volume", "ball", "--n", "4", "--r", "1", "--format", "structured"}).out ==
          "n=4\nr=1\nvalue=4\n");
    CHECK(has_line(run({"volume", "ball", "--n", "4", "--r", "100", "--format", "structured"}).out,
                   "value=24"));
    CHECK(run({"volume", "q", "--n", "3", "--r", "2", "--format", "structured"}).out ==
          "n=3\nr=2\nvalue=6\n");
    CHECK(run({"volume", "hball", "--n", "3", "--r", "1", "--format", "structured"}).out ==
          "n=3\nr=1\nvalue=4\n");

    CHECK(run({"volume", "kn", "--n", "4"}).code == 1);      // --k required for kn
    CHECK(run({"volume", "kn", "--k", "2"}).code == 1);      // --n always required
    CHECK(run({"volume", "kn", "--n", "0", "--k", "1"}).code == 1);
    CHECK(run({"volume", "bogus", "--n", "3", "--k", "1"}).code == 1);
}

TEST_CASE("bounds: full report shape") {
    const auto r = run({"bounds", "--n", "4", "--d", "3", "--format", "structured"});
    CHECK(r.code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 21);
    CHECK(lines[0] == "n=4");
    CHECK(lines[1] == "d=3");
    CHECK(lines[2] == "N=6");
    CHECK(lines[3] == "singleton_upper=24");
    CHECK(lines[9] == "plotkin_upper=na");
    CHECK(lines[19].rfind("rate_lower=", 0) == 0);
    CHECK(lines[20].rfind("rate_upper=", 0) == 0);

    CHECK(run({"bounds", "--n", "4", "--d", "7"}).code == 1);
    CHECK(run({"bounds", "--n", "4"}).code == 1);
}

TEST_CASE("construct, verify, decode: file round trip") {
    const auto dir = std::filesystem::temp_directory_path();
    const std::string path = (dir / "rankmod_cli_test.code").string();

    const auto c = run({"construct", "--n", "5", "--t", "2", "--out", path, "--format", "structured"});
    CHECK(c.code == 0);
    CHECK(has_line(c.out, "mt=104"));
    CHECK(has_line(c.out, "size=3"));
    CHECK(has_line(c.out, "efficiency=0.350000"));
    CHECK(has_line(c.out, "min_distance_checked=true"));
    CHECK(has_line(c.out, "file=" + path));
    bool saw_md = false;
    for (const auto& l : lines_of(c.out))
        if (l.rfind("min_distance=", 0) == 0) {
            saw_md = true;
            CHECK(std::stol(l.substr(13)) >= 5);
        }
    CHECK(saw_md);

    const auto v = run({"verify", path, "--format", "structured"});
    CHECK(v.code == 0);
    CHECK(has_line(v.out, "verified=true"));
    CHECK(has_line(v.out, "size=3"));

    const rank_code code = build_code(5, 2);
    const std::string word = codeword_index(code, 0).str();
    const auto d0 = run({"decode", path, word, "--format", "structured"});
    CHECK(d0.code == 0);
    CHECK(has_line(d0.out, "syndrome=0"));
    CHECK(has_line(d0.out, "decoded=" + word));

    const std::string corrupted = swapped_words(word, 1);
    const auto d1 = run({"decode", path, corrupted, "--format", "structured"});
    CHECK(d1.code == 0);
    CHECK(!has_line(d1.out, "syndrome=0"));
    CHECK(has_line(d1.out, "decoded=" + word));

    CHECK(run({"decode", path, "1,2,3"}).code == 1);

    // tamper with a stored codeword; verify must fail the gates
    std::ifstream in(path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    in.close();
    auto lines = lines_of(text);
    lines.at(10) = swapped_words(lines.at(10), 1);
    std::ofstream outf(path, std::ios::binary);
    for (const auto& l : lines) outf << l << "\n";
    outf.close();
    const auto bad = run({"verify", path});
    CHECK(bad.code == 2);
    CHECK(!bad.err.empty());

    std::filesystem::remove(path);
    CHECK(run({"verify", path}).code == 1);  // no such file
}

TEST_CASE("construct: argument and capability limits") {
    CHECK(run({"construct", "--n", "13", "--t", "2"}).code == 1);
    CHECK(run({"construct", "--n", "3", "--t", "1"}).code == 1);
    CHECK(run({"construct", "--n", "5", "--t", "0"}).code == 1);
    CHECK(run({"construct", "--n", "12", "--t", "9"}).code == 3);  // field table cap
    CHECK(run({"construct", "--n", "12", "--t", "1"}).code == 3);  // codebook cap
}

TEST_CASE("optimal: exact values and caps") {
    const auto r = run({"optimal", "--n", "3", "--d", "3", "--format", "structured"});
    CHECK(r.code == 0);
    CHECK(r.out == "n=3\nd=3\nvalue=2\n");
    CHECK(has_line(run({"optimal", "--n", "4", "--d", "1", "--format", "structured"}).out,
                   "value=24"));
    CHECK(run({"optimal", "--n", "6", "--d", "3"}).code == 1);
    CHECK(run({"optimal", "--n", "3", "--d", "9"}).code == 1);
}

TEST_CASE("help and dispatch errors") {
    const auto h = run({"--help"});
    CHECK(h.code == 0);
    CHECK(h.out.find("dist") != std::string::npos);
    CHECK(h.out.find("construct") != std::string::npos);

    CHECK(run({}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
}

}  // TEST_SUITE
