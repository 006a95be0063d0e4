#include <catch_amalgamated.hpp>

#include <json.hpp>
#include <sstream>

#include "tropfrieze/cli.hpp"

using tropfrieze::run_cli;

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args) {
    args.insert(args.begin(), "tropfrieze");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("frieze tables", "[cli]") {
    const Run r = cli({"frieze", "--cartan", "A2", "--kind", "trop", "--slice", "1,0", "--window", "-1..4"});
    CHECK(r.code == 0);
    CHECK(r.out == "i\\m\t-1\t0\t1\t2\t3\t4\n1\t0\t1\t-1\t1\t0\t0\n2\t1\t0\t0\t1\t-1\t1\n");
    const Run add = cli({"frieze", "--cartan", "[[2,-1],[-1,2]]", "--kind", "cluster-add", "--slice", "[-1,0]",
                         "--window", "0..2", "--format", "json"});
    REQUIRE(add.code == 0);
    const auto j = nlohmann::json::parse(add.out);
    CHECK(j.dump().find("[-1,1,0]") != std::string::npos);
}

TEST_CASE("generic patterns", "[cli]") {
    const Run r = cli({"frieze", "--cartan", "A2", "--kind", "generic-a", "--window", "0..1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("1\t1\tx1^-1 + x1^-1*x2\n") != std::string::npos);
}

TEST_CASE("pairing output carries every route", "[cli]") {
    const Run r = cli({"pairing", "--cartan", "A2", "--delta", "1,0", "--rho", "-1,0", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["pairing"] == 1);
    for (const char* key : {"via_x", "via_y", "via_domain", "via_max"}) CHECK(j["witness"][key] == 1);
}

TEST_CASE("monomials", "[cli]") {
    const Run r = cli({"monomial", "--cartan", "A2", "--side", "A", "--coords", "1,-1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("value\tx1^-1 + x1^-1*x2") != std::string::npos);
}

TEST_CASE("verification is deterministic under a seed", "[cli]") {
    const std::vector<std::string> args{"verify", "--suite", "periodicity,shift", "--types", "A2,B2",
                                        "--trials", "5",      "--rng-seed",          "17"};
    const Run a = cli(args), b = cli(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.rfind("# rng_seed 17\n", 0) == 0);
    const Run rank_two = cli({"verify", "--suite", "remark-not-in"});
    CHECK(rank_two.code == 0);
    CHECK(rank_two.out.find("Y-variables 10, global 5") != std::string::npos);
}

TEST_CASE("exit codes and diagnostics", "[cli]") {
    CHECK(cli({"--help"}).code == 0);
    const Run bad = cli({"frieze", "--cartan", "A2", "--slice", "1,2,3"});
    CHECK(bad.code == 2);
    const auto diag = nlohmann::json::parse(bad.err);
    CHECK(diag["exit_code"] == 2);
    CHECK(diag.contains("error"));
    CHECK(diag.contains("message"));
    CHECK(cli({"pairing", "--cartan", "[[2,-2],[-2,2]]", "--delta", "0,0", "--rho", "0,0"}).code == 2);
    CHECK(cli({"monomial", "--cartan", "[[2,-2],[-2,2]]", "--coords", "0,0"}).code == 2);
    CHECK(cli({"frieze", "--cartan", "A2", "--window", "5..1"}).code == 2);
    CHECK(cli({"nonsense"}).code == 2);
    const Run budget = cli({"mutate", "--matrix", "[[0,-2],[2,0]]", "--enumerate", "--budget", "20"});
    CHECK(budget.code == 3);
    CHECK(nlohmann::json::parse(budget.err)["error"] == "BudgetExceeded");
}

TEST_CASE("tropical readback from a named type", "[cli]") {
    const Run r = cli({"trop", "--space", "A", "--cartan", "A2", "--transpose", "--coords", "1,0", "--window", "0..3",
                       "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["readback"]["rows"] == nlohmann::json::parse("[[1,-1,1,0],[0,0,1,-1]]"));
    CHECK(j["target_coords"] == nlohmann::json::parse("[1,0]"));
}
