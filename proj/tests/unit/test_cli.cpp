#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "holm/cli.hpp"
#include "holm/serialize.hpp"

using namespace holm;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

nlohmann::json run_json(std::vector<std::string> args) {
    args.push_back("--json");
    args.push_back("-");
    auto r = run(args);
    // stdout holds nothing but the document
    return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("validate") {
    auto ok = run({"validate", "1", "2"});
    CHECK(ok.code == cli::kOk);
    CHECK(contains(ok.out, "valid"));
    auto sq = run({"validate", "4", "3"});
    CHECK(sq.code == cli::kValidation);
    CHECK(contains(sq.out, "4 is not squarefree"));
    auto eq = run({"validate", "3", "3"});
    CHECK(eq.code == cli::kValidation);
    CHECK(contains(eq.out, "k = l"));
}

TEST_CASE("map") {
    auto e = run({"map", "1", "2", "--to-e", "1", "0"});
    CHECK(e.code == 0);
    CHECK(e.out == "(1, -3)\n");
    auto h = run({"map", "1", "2", "--to-h", "4", "6"});
    CHECK(h.out == "(0, 1)\n");
    auto inf = run({"map", "1", "2", "--to-e", "0", "0"});
    CHECK(inf.out == "INFINITY\n");
    auto off = run({"map", "1", "2", "--to-e", "2", "2"});
    CHECK(off.code == cli::kValidation);
    CHECK(contains(off.err, "not on H"));
    CHECK(run({"map", "1", "2", "1", "0"}).code == cli::kValidation);
    auto frac = run({"map", "1", "2", "--to-h", "1/4", "33/8"});
    CHECK(frac.code == 0);
}

TEST_CASE("mul") {
    auto both = run({"mul", "1", "2", "2", "1", "-3", "--method", "both"});
    CHECK(both.code == 0);
    CHECK(contains(both.out, "grouplaw: (1/4, 33/8)"));
    CHECK(contains(both.out, "divpoly:  (1/4, 33/8)"));
    CHECK(contains(both.out, "MATCH"));
    auto zero = run({"mul", "1", "2", "0", "1", "-3"});
    CHECK(zero.out == "INFINITY\n");
    auto l3 = run({"mul", "5", "1", "15", "25", "120"});
    CHECK(l3.code == 0);
    CHECK(contains(l3.out, "v5(x) = -4"));
    auto neg = run({"mul", "1", "2", "-2", "1", "-3", "--method", "both"});
    CHECK(contains(neg.out, "MATCH"));
    CHECK(run({"mul", "1", "2", "2", "1", "3", "--method", "bogus"}).code == cli::kValidation);
    CHECK(run({"mul", "1", "2", "2", "1", "4"}).code == cli::kValidation);
}

TEST_CASE("divpoly") {
    auto two = run({"divpoly", "1", "2", "2"});
    CHECK(contains(two.out, "psi_2 g: [2]"));
    CHECK(contains(two.out, "psi_2 f: []"));
    auto three = run({"divpoly", "1", "2", "3"});
    CHECK(contains(three.out, "psi_3 f: [-144, 240, -72, 0, 3]"));
    auto one = run({"divpoly", "1", "2", "1"});
    CHECK(contains(one.out, "psi_1 f: [1]"));
    CHECK(contains(one.out, "phi_1: [0, 1]"));
    CHECK(run({"divpoly", "1", "2", "0"}).code == 0);
    CHECK(run({"divpoly", "1", "2", "-1"}).code == cli::kValidation);
}

TEST_CASE("lemmas") {
    auto l12 = run({"lemmas", "1", "2"});
    CHECK(l12.code == 0);
    CHECK(contains(l12.out, "all CONFIRMED"));
    CHECK_FALSE(contains(l12.out, "VIOLATED"));
    auto l31 = run({"lemmas", "3", "1", "--bound", "2000"});
    CHECK(l31.code == 0);
    CHECK(contains(l31.out, "lemma 2  q=3"));
    CHECK(contains(l31.out, "(bound <= -2)"));
    auto bad = run({"lemmas", "2", "4"});
    CHECK(bad.code == cli::kValidation);
    CHECK(run({"lemmas", "1", "2", "--bound", "0"}).code == cli::kValidation);
}

TEST_CASE("certify") {
    auto c12 = run({"certify", "1", "2"});
    CHECK(c12.code == 0);
    CHECK(contains(c12.out, "TORSION_FREE_CONFIRMED"));
    auto c56 = run({"certify", "5", "6"});
    CHECK(c56.code == 0);
    CHECK(contains(c56.out, "TORSION_FREE_CONFIRMED"));
    CHECK(run({"certify", "1", "1"}).code == cli::kValidation);
}

TEST_CASE("certify writes a JSON file") {
    std::string path = "test_cli_cert_1_2.json";
    auto r = run({"certify", "1", "2", "--json", path});
    CHECK(r.code == 0);
    std::ifstream in(path);
    REQUIRE(in.good());
    auto j = nlohmann::json::parse(in);
    CHECK(j["conclusion"] == "TORSION_FREE_CONFIRMED");
    CHECK(j["discriminant"] == "-62208");
    in.close();
    std::remove(path.c_str());
}

TEST_CASE("search-integral") {
    auto r = run({"search-integral", "1", "2", "--bound", "10"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "(1, -3)\n(1, 3)\n"));
    CHECK(contains(r.out, "(4, -6)\n(4, 6)\n"));
}

TEST_CASE("json output round-trips") {
    auto m = run_json({"map", "1", "2", "--to-e", "1", "0"});
    CHECK(epoint_from_json(m["output"]) == EPoint::affine(Rational(1), Rational(-3)));
    CHECK(hpoint_from_json(m["input"]) == HPoint{1, 0});

    auto mul = run_json({"mul", "1", "2", "2", "1", "-3", "--method", "both"});
    CHECK(epoint_from_json(mul["grouplaw"]) == EPoint::affine(Rational(1, 4), Rational(33, 8)));
    CHECK(mul["match"] == true);

    auto d = run_json({"divpoly", "1", "2", "3"});
    CHECK(d["psi"]["f"] == nlohmann::json({"-144", "240", "-72", "0", "3"}));

    auto v = run_json({"validate", "4", "3"});
    CHECK(v["valid"] == false);

    auto s = run_json({"search-integral", "3", "1", "--bound", "10"});
    bool found = false;
    for (const auto& p : s["points"]) {
        found = found || epoint_from_json(p) == EPoint::affine(Rational(9), Rational(24));
    }
    CHECK(found);
}

TEST_CASE("output is deterministic") {
    std::vector<std::string> cmd{"certify", "2", "7", "--json", "-"};
    CHECK(run(cmd).out == run(cmd).out);
    std::vector<std::string> lem{"lemmas", "5", "6", "--bound", "3000", "--workers", "3"};
    std::vector<std::string> lem1{"lemmas", "5", "6", "--bound", "3000"};
    CHECK(run(lem).out == run(lem1).out);
}
