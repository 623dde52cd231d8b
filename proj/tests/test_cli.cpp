#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "fqcount/cli.hpp"

using namespace fqcount;

namespace {

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

CliResult run(std::initializer_list<const char*> args) {
    std::vector<const char*> argv{"fqcount"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& text, const std::string& needle) {
    return text.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("count emits the bare value in text mode") {
    const CliResult res = run({"count", "--q", "2", "--n", "6"});
    CHECK(res.code == 0);
    CHECK(res.out == "9\n");
    CHECK(res.err.empty());
}

TEST_CASE("count in csv and json") {
    const CliResult csv = run({"count", "--q", "2", "--n", "6", "--format", "csv"});
    CHECK(csv.code == 0);
    CHECK(csv.out == "q,n,value\n2,6,9\n");

    const CliResult json = run({"count", "--q", "3", "--n", "4", "--format", "json"});
    CHECK(json.code == 0);
    const auto body = nlohmann::json::parse(json.out);
    CHECK(body["command"] == "count");
    CHECK(body["q"] == 3);
    CHECK(body["n"] == 4);
    CHECK(body["value"] == "18");
}

TEST_CASE("table csv is stable") {
    const CliResult res = run({"table", "--q", "2", "--n-max", "4", "--format", "csv"});
    CHECK(res.code == 0);
    CHECK(res.out == "n,value\n1,2\n2,1\n3,2\n4,3\n");
}

TEST_CASE("table json carries decimal strings") {
    const CliResult res = run({"table", "--q", "2", "--n-max", "3", "--format", "json"});
    CHECK(res.code == 0);
    const auto body = nlohmann::json::parse(res.out);
    CHECK(body["rows"].size() == 3);
    CHECK(body["rows"][2]["n"] == 3);
    CHECK(body["rows"][2]["value"] == "2");
}

TEST_CASE("verify passes on a holding range") {
    const CliResult res = run({"verify", "--check", "logconvex", "--q", "2", "--n-range",
                               "19..388"});
    CHECK(res.code == 0);
    CHECK(contains(res.out, "result: PASS (370 checks)"));
    CHECK(contains(res.out, "failures: none"));
}

TEST_CASE("verify reports failures and exits 1") {
    const CliResult res =
        run({"verify", "--check", "rootratio", "--q", "2", "--n-range", "13..20"});
    CHECK(res.code == 1);
    CHECK(contains(res.out, "failures: 13"));
    CHECK(contains(res.out, "result: FAIL (1 of 8 checks failed)"));
}

TEST_CASE("verify json is machine readable") {
    const CliResult res = run({"verify", "--check", "rootmono", "--q", "2", "--n-range",
                               "1..50", "--format", "json"});
    CHECK(res.code == 1);
    const auto body = nlohmann::json::parse(res.out);
    CHECK(body["command"] == "verify");
    CHECK(body["q"] == 2);
    CHECK(body["property"] == "rootmono");
    CHECK(body["checked_range"] == nlohmann::json::array({1, 50}));
    CHECK(body["failures"] == nlohmann::json::array({1}));
    const auto& methods = body["method_counts"];
    CHECK(methods["exact"].get<std::uint64_t>() + methods["certified"].get<std::uint64_t>() ==
          50);
}

TEST_CASE("verify over a q-set tags failures with their base") {
    const CliResult res = run({"verify", "--check", "logconvex", "--q-set", "9,16",
                               "--n-range", "1..30", "--format", "csv"});
    CHECK(res.code == 0);
    CHECK(contains(res.out, "q,n,holds,method"));
    CHECK(contains(res.out, "9,1,true"));
    CHECK(contains(res.out, "16,30,true"));
}

TEST_CASE("verify single index") {
    CHECK(run({"verify", "--check", "rootratio", "--q", "2", "--n", "14"}).code == 0);
    CHECK(run({"verify", "--check", "rootratio", "--q", "2", "--n", "13"}).code == 1);
}

TEST_CASE("exact-only verify reports only exact methods") {
    const CliResult res = run({"verify", "--check", "rootratio", "--q", "2", "--n-range",
                               "14..20", "--exact-only", "--format", "csv"});
    CHECK(res.code == 0);
    CHECK(contains(res.out, "14,true,exact"));
    CHECK_FALSE(contains(res.out, "certified"));
}

TEST_CASE("bound family checks pass over their stated ranges") {
    CHECK(run({"verify", "--check", "lemma21", "--q", "2", "--n-range", "2..100"}).code == 0);
    CHECK(run({"verify", "--check", "lemma22", "--q", "2", "--n-range", "2..30"}).code == 0);
    CHECK(run({"verify", "--check", "lemma23", "--q", "3", "--n-range", "5..60"}).code == 0);
    CHECK(run({"verify", "--check", "lemma24", "--q", "2", "--n-range", "6..60"}).code == 0);
    CHECK(run({"verify", "--check", "pnchain", "--q", "9", "--n-range", "6..60"}).code == 0);
    CHECK(run({"verify", "--check", "smallqchain", "--q", "2", "--n-range", "6..60"}).code ==
          0);
}

TEST_CASE("scan reports the onset") {
    const CliResult res = run({"scan", "--property", "rootratio", "--q", "2", "--n-max", "40",
                               "--format", "json"});
    CHECK(res.code == 0);
    const auto body = nlohmann::json::parse(res.out);
    CHECK(body["command"] == "scan");
    CHECK(body["property"] == "root_ratio_decreasing");
    CHECK(body["onset"] == 14);
    CHECK(body["caveat"] == false);
    CHECK(body["failures"] == nlohmann::json::array({1, 3, 5, 7, 9, 11, 13}));
}

TEST_CASE("scan csv lists one verdict per index") {
    const CliResult res =
        run({"scan", "--property", "rootmono", "--q", "3", "--n-max", "5", "--format", "csv"});
    CHECK(res.code == 0);
    CHECK(res.out == "q,n,holds\n3,1,false\n3,2,true\n3,3,true\n3,4,true\n3,5,true\n");
}

TEST_CASE("scan over a q-set compares onsets against the reference") {
    const CliResult res = run({"scan", "--property", "rootratio", "--q-set", "2,3,4,5",
                               "--n-max", "60", "--format", "csv"});
    CHECK(res.code == 0);
    CHECK(res.out == "q,onset,expected,matches,caveat\n"
                     "2,14,14,true,false\n"
                     "3,8,8,true,false\n"
                     "4,6,6,true,false\n"
                     "5,6,6,true,false\n");

    const CliResult text = run({"scan", "--property", "rootratio", "--q-set", "2,3",
                                "--n-max", "60"});
    CHECK(text.code == 0);
    CHECK(contains(text.out, "q=2 onset=14 expected=14 match=yes"));
    CHECK(contains(text.out, "result: PASS (2 onsets match)"));
}

TEST_CASE("scan exact-only leaves no certified verdicts") {
    const CliResult res = run({"scan", "--property", "rootratio", "--q", "3", "--n-max", "30",
                               "--exact-only", "--format", "json"});
    CHECK(res.code == 0);
    const auto body = nlohmann::json::parse(res.out);
    CHECK(body["method_counts"]["certified"] == 0);
    CHECK(body["method_counts"]["exact"] == 30);
}

TEST_CASE("bounds rows expose scale, residual and floor") {
    const CliResult res = run({"bounds", "--q", "2", "--n-range", "2..4", "--format", "csv"});
    CHECK(res.code == 0);
    CHECK(contains(res.out, "n,scale,residual,gap_ok,c_bound_ok,floor_lower,floor_upper"));
    CHECK(contains(res.out, "2,1,-1/2,true,true,"));
    CHECK(contains(res.out, "4,2,-1/4,true,true,"));
}

TEST_CASE("oracle agrees with the formula") {
    const CliResult res = run({"oracle", "--q", "3", "--n-max", "5", "--compare"});
    CHECK(res.code == 0);
    CHECK(contains(res.out, "result: PASS (5 degrees agree)"));

    const CliResult csv = run({"oracle", "--q", "2", "--n-max", "4", "--format", "csv"});
    CHECK(csv.code == 0);
    CHECK(csv.out == "n,sieve\n1,2\n2,1\n3,2\n4,3\n");

    const CliResult json =
        run({"oracle", "--q", "4", "--n-max", "3", "--compare", "--format", "json"});
    CHECK(json.code == 0);
    const auto body = nlohmann::json::parse(json.out);
    CHECK(body["all_match"] == true);
    CHECK(body["rows"][0]["sieve"] == "4");
    CHECK(body["rows"][1]["sieve"] == "6");
    CHECK(body["rows"][2]["sieve"] == "20");
}

TEST_CASE("non prime power bases are rejected unless allowed") {
    const CliResult strict = run({"count", "--q", "6", "--n", "3"});
    CHECK(strict.code == 2);
    CHECK(contains(strict.err, "not a prime power"));

    const CliResult permissive =
        run({"count", "--q", "6", "--n", "3", "--allow-nonprimepower"});
    CHECK(permissive.code == 0);
    CHECK(permissive.out == "70\n"); // (6^3 - 6)/3

    const CliResult verify = run({"verify", "--check", "logconvex", "--q", "70", "--n-range",
                                  "1..10", "--allow-nonprimepower"});
    CHECK(verify.code == 0);
    CHECK(contains(verify.err, "warning: 70 is not a prime power"));
}

TEST_CASE("usage and domain errors exit 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"count", "--q", "2"}).code == 2);
    CHECK(run({"verify", "--check", "bogus", "--q", "2", "--n", "3"}).code == 2);
    CHECK(run({"verify", "--check", "rootmono", "--q", "2", "--n-range", "9..3"}).code == 2);
    CHECK(run({"verify", "--check", "rootmono", "--q", "2", "--n", "3", "--n-range", "1..5"})
              .code == 2);
    CHECK(run({"verify", "--check", "rootmono", "--q", "2", "--n", "3", "--precision-bits",
               "16"})
              .code == 2);
    CHECK(run({"verify", "--check", "lemma23", "--q", "2", "--n-range", "2..10"}).code == 2);
    CHECK(run({"verify", "--check", "pnchain", "--q", "8", "--n-range", "6..10"}).code == 2);
    CHECK(run({"verify", "--check", "smallqchain", "--q", "9", "--n-range", "6..10"}).code ==
          2);
    CHECK(run({"scan", "--property", "logconvex", "--q-set", "2,3", "--n-max", "30"}).code ==
          2);
    CHECK(run({"oracle", "--q", "6", "--n-max", "3"}).code == 2);
}

TEST_CASE("interval-only checks refuse --exact-only") {
    const CliResult lemma22 = run({"verify", "--check", "lemma22", "--q", "2", "--n-range",
                                   "2..5", "--exact-only"});
    CHECK(lemma22.code == 2);
    CHECK(contains(lemma22.err, "drop --exact-only"));

    const CliResult bounds = run({"bounds", "--q", "2", "--n-range", "2..5", "--exact-only"});
    CHECK(bounds.code == 2);
    CHECK(contains(bounds.err, "drop --exact-only"));
}

TEST_CASE("capacity limits exit 2") {
    const CliResult count = run({"count", "--q", "2", "--n", "1000", "--bit-cap", "64"});
    CHECK(count.code == 2);

    // The sieve index space at q=2 needs n_max bits per polynomial.
    const CliResult oracle = run({"oracle", "--q", "2", "--n-max", "10", "--bit-cap", "4"});
    CHECK(oracle.code == 2);
}

TEST_CASE("help exits 0") {
    const CliResult res = run({"--help"});
    CHECK(res.code == 0);
    CHECK(contains(res.out, "count"));
    CHECK(contains(res.out, "verify"));
}
