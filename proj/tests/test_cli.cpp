#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "linroots/cli.hpp"

using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = linroots::cli::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("kernel verb reproduces the worked example") {
    Run r = run({"kernel", "--q", "2", "--n", "3", "--t", "5", "--s0", "1",
                 "--b", "-1,1,0,0,0"});
    CHECK(r.code == 0);
    CHECK(r.out.find("dim: 4") != std::string::npos);
    CHECK(r.out.find("field: 2^15") != std::string::npos);

    Run s = run({"kernel", "--q", "2", "--n", "3", "--t", "5", "--s0", "1",
                 "--b", "-1,1,0,0,0", "--format", "structured"});
    CHECK(s.code == 0);
    json j = json::parse(s.out);
    CHECK(j["dim"] == 4);
    CHECK(j["method"] == "restricted");
    CHECK(j["field"].get<std::string>().rfind("2^15", 0) == 0);
}

TEST_CASE("kernel --method all cross-checks every method") {
    Run r = run({"kernel", "--q", "2", "--n", "3", "--t", "5", "--s0", "1",
                 "--b", "-1,1,0,0,0", "--method", "all", "--format",
                 "structured"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["agree"] == true);
    CHECK(j["dim"] == 4);
    CHECK(j["witnesses"].size() >= 5);
    for (const auto& [m, d] : j["witnesses"].items()) CHECK(d == 4);
}

TEST_CASE("kernel of -x is zero-dimensional") {
    // plain-polynomial route: f = -x = x over F_{2^4}
    Run p = run({"kernel", "--field", "2^4", "--q", "2", "--poly", "0:1",
                 "--method", "dickson", "--format", "structured"});
    CHECK(p.code == 0);
    CHECK(json::parse(p.out)["dim"] == 0);
}

TEST_CASE("roots verb emits one basis element per line") {
    Run r = run({"roots", "--q", "2", "--n", "3", "--t", "5", "--s0", "1",
                 "--b", "-1,1,0,0,0"});
    CHECK(r.code == 0);
    CHECK(r.out.find("dim: 4") != std::string::npos);
    // 2 header lines + 4 basis lines
    int lines = 0;
    for (char c : r.out) lines += (c == '\n');
    CHECK(lines == 6);
}

TEST_CASE("permutation and maxkernel verbs") {
    Run perm = run({"permutation", "--q", "5", "--n", "3", "--t", "2",
                    "--s0", "1", "--b", "-1,1", "--format", "structured"});
    CHECK(perm.code == 0);
    CHECK(json::parse(perm.out)["permutation"] == true);

    Run notperm = run({"permutation", "--q", "7", "--n", "3", "--t", "2",
                       "--s0", "1", "--b", "-1,1", "--format", "structured"});
    CHECK(json::parse(notperm.out)["permutation"] == false);

    Run mk = run({"maxkernel", "--q", "2", "--n", "2", "--t", "2", "--s0", "3",
                  "--b", "g^5,g^10", "--format", "structured"});
    CHECK(mk.code == 0);
}

TEST_CASE("trinomial-bound and t2-classify verbs") {
    Run tb = run({"trinomial-bound", "--q", "2", "--n", "3", "--t", "4",
                  "--s0", "1", "--b", "1,0,1,0", "--format", "structured"});
    CHECK(tb.code == 0);
    json j = json::parse(tb.out);
    CHECK(j["bound"] == 3);
    CHECK(j["improved"] == true);

    Run t2 = run({"t2-classify", "--q", "2", "--n", "2", "--t", "2", "--s0",
                  "3", "--b", "1,1", "--format", "structured"});
    CHECK(t2.code == 0);
    json k = json::parse(t2.out);
    CHECK(k.contains("dim"));
    CHECK(k.contains("branch"));
}

TEST_CASE("weight-spectrum verb reports the club") {
    Run r = run({"weight-spectrum", "--q", "2", "--n", "2", "--t", "3",
                 "--s0", "1", "--b", "1,1,1", "--format", "structured"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["club"] == 4);
    CHECK(j["scattered"] == false);
    CHECK(j["infinity_weight"] == 4);
    CHECK(j["counts"]["1"] == 48);
    CHECK(j["counts"]["4"] == 1);
    CHECK(j["size"] == 49);
}

TEST_CASE("scattered-check and search-alpha verbs") {
    Run sa = run({"search-alpha", "--q", "3", "--n", "3", "--t", "2",
                  "--format", "structured"});
    CHECK(sa.code == 0);
    json j = json::parse(sa.out);
    REQUIRE(j["count"].get<uint64_t>() > 0);
    std::string first = j["alphas"][0].get<std::string>();
    CHECK(first.rfind("g^", 0) == 0);   // generator-power text form

    Run sc = run({"scattered-check", "--q", "3", "--n", "3", "--t", "2",
                  "--alpha", first, "--format", "structured"});
    CHECK(sc.code == 0);
    json k = json::parse(sc.out);
    CHECK(k["scattered"] == true);
    CHECK(k["quad"] == "two-in-base");
    CHECK(k["x2"] == 0);
}

TEST_CASE("spec errors name the offending token and exit 2") {
    Run bad_field = run({"kernel", "--q", "2", "--n", "3", "--t", "5", "--s0",
                         "1", "--b", "-1,1,0,0,0", "--field", "2^9"});
    CHECK(bad_field.code == 2);
    CHECK(bad_field.err.find("2^9") != std::string::npos);

    Run bad_b = run({"kernel", "--q", "2", "--n", "3", "--t", "5", "--s0", "1",
                     "--b", "-1,zebra,0,0,0"});
    CHECK(bad_b.code == 2);
    CHECK(bad_b.err.find("zebra") != std::string::npos);

    Run missing = run({"kernel", "--q", "2", "--n", "3", "--t", "5"});
    CHECK(missing.code == 2);
    CHECK(missing.err.find("--s0") != std::string::npos);

    Run bad_verb = run({"frobnicate"});
    CHECK(bad_verb.code == 2);
}

TEST_CASE("output is deterministic") {
    std::vector<std::string> args = {"kernel", "--q", "3",  "--n", "2",
                                     "--t",    "3", "--s0", "1",   "--b",
                                     "1,g^3,2", "--method", "all"};
    Run a = run(args);
    Run b = run(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
}
