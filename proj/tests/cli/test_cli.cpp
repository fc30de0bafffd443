#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "json.hpp"

#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

// Spawns the binary under test through the shell; stderr is dropped so
// diagnostic chatter never pollutes the captured stream.
RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    const char* exe = std::getenv("ITERFIX_CLI");
    if (exe == nullptr) throw std::runtime_error("ITERFIX_CLI is not set");
    std::string cmd = env_prefix + "\"" + exe + "\" " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) throw std::runtime_error("popen failed");
    RunResult result;
    char buffer[4096];
    std::size_t got = 0;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
        result.out.append(buffer, got);
    }
    int rc = pclose(pipe);
    result.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return result;
}

nlohmann::json parse_json(const std::string& text) { return nlohmann::json::parse(text); }

} // namespace

TEST_SUITE("cli") {

TEST_CASE("help exits cleanly and lists the subcommands") {
    RunResult r = run_cli("--help");
    CHECK(r.status == 0);
    for (const char* name : {"fixpoints", "trace", "check", "scan", "search", "verify"}) {
        CHECK(r.out.find(name) != std::string::npos);
    }
}

TEST_CASE("bad invocations exit with the input-error code") {
    CHECK(run_cli("").status == 2);
    CHECK(run_cli("frobnicate").status == 2);
    CHECK(run_cli("fixpoints").status == 2);                        // missing --poly
    CHECK(run_cli("fixpoints --poly zebra").status == 2);           // unparsable coefficients
    CHECK(run_cli("fixpoints --poly 0,1").status == 2);             // degree too low
    CHECK(run_cli("fixpoints --poly 0,0,1 --n 13").status == 2);    // 2^13 over the cap
    CHECK(run_cli("check --poly 0,0,1 --flavor D").status == 2);    // unknown flavor
    CHECK(run_cli("--format yaml fixpoints --poly 0,0,1").status == 2);
}

TEST_CASE("fixpoints reports the full point set as json") {
    RunResult r = run_cli("fixpoints --poly 0,0,1 --n 2");
    REQUIRE(r.status == 0);
    nlohmann::json j = parse_json(r.out);
    CHECK(j["n"] == 2);
    CHECK(j["d"] == 2);
    CHECK(j["count_with_multiplicity"] == 4);
    REQUIRE(j["points"].size() == 4);
    int mult_total = 0;
    for (const auto& pt : j["points"]) {
        mult_total += pt["multiplicity"].get<int>();
        CHECK(pt.contains("location"));
        CHECK(pt.contains("multiplier"));
        CHECK(pt.contains("exact_period"));
        CHECK(pt.contains("cycle_id"));
        CHECK(pt.contains("class"));
    }
    CHECK(mult_total == 4);
    CHECK(j["warnings"].empty());
}

TEST_CASE("trace validates the identity and honours --w") {
    RunResult r = run_cli("trace --poly 0,0,0,1 --n 1");
    REQUIRE(r.status == 0);
    nlohmann::json j = parse_json(r.out);
    CHECK(j["d"] == 3);
    CHECK(j["lhs"]["re"].get<double>() == doctest::Approx(6.0).epsilon(1e-8));
    CHECK(j["rel_residual"].get<double>() < 1e-6);
    CHECK(j["w_samples"].size() == 3); // defaults

    RunResult rw = run_cli("trace --poly 0,0,0,1 --w 3-1i --w 0.5");
    REQUIRE(rw.status == 0);
    nlohmann::json jw = parse_json(rw.out);
    REQUIRE(jw["w_samples"].size() == 2);
    CHECK(jw["w_samples"][0]["re"].get<double>() == 3.0);
    CHECK(jw["w_samples"][0]["im"].get<double>() == -1.0);
}

TEST_CASE("check passes the proved bound and reports the witness") {
    RunResult r = run_cli("check --poly=-1,0,1 --flavor theorem3");
    REQUIRE(r.status == 0);
    nlohmann::json j = parse_json(r.out);
    CHECK(j["flavor"] == "theorem3");
    CHECK(j["threshold"] == 4.0);
    CHECK(j["passed"] == true);
    CHECK(j["observed_max"].get<double>() == doctest::Approx(10.4721359549996).epsilon(1e-9));
    CHECK(j["witness"]["abs_multiplier"].get<double>() ==
          doctest::Approx(j["observed_max"].get<double>()).epsilon(1e-12));

    RunResult rc = run_cli("check --poly 0,0,0,1 --n 2 --flavor C");
    REQUIRE(rc.status == 0);
    nlohmann::json jc = parse_json(rc.out);
    CHECK(jc["threshold"] == 9.0);
    CHECK(std::abs(jc["margin"].get<double>()) < 1e-8);
    CHECK(jc["passed"] == true);
}

TEST_CASE("scan echoes its configuration and finds no violations") {
    RunResult r = run_cli("scan --d 2 --n 2 --samples 12 --seed 42");
    REQUIRE(r.status == 0);
    nlohmann::json j = parse_json(r.out);
    CHECK(j["seed"] == 42);
    CHECK(j["samples"] == 12);
    CHECK(j["violations"].empty());
    CHECK(j["skipped"] == 0);
    CHECK(j["min_observed_max"].get<double>() >= 4.0 - 1e-6);
    CHECK_FALSE(j["family"].get<std::string>().empty());
    CHECK(j["argmin"].is_string());
}

TEST_CASE("scan output is byte-identical across thread budgets") {
    std::string args = "scan --d 3 --n 2 --samples 10 --seed 7";
    RunResult one = run_cli(args, "ITERFIX_THREADS=1 ");
    RunResult four = run_cli(args, "ITERFIX_THREADS=4 ");
    REQUIRE(one.status == 0);
    REQUIRE(four.status == 0);
    CHECK(one.out == four.out);
}

TEST_CASE("search reports the floor and reproduces across thread budgets") {
    std::string args = "search --d 2 --n 2 --starts 3 --iters 40 --seed 9";
    RunResult one = run_cli(args, "ITERFIX_THREADS=1 ");
    RunResult four = run_cli(args, "ITERFIX_THREADS=4 ");
    REQUIRE(one.status == 0);
    CHECK(one.out == four.out);
    nlohmann::json j = parse_json(one.out);
    CHECK(j["seed"] == 9);
    CHECK(j["conjecture_floor"] == 4.0);
    CHECK(j["best_value"].get<double>() >= 4.0 - 1e-3);
    CHECK(j["evaluations"].get<long long>() > 0);
    CHECK(j["per_start_bests"].size() == 3);
}

TEST_CASE("verify runs the oracle suite") {
    RunResult r = run_cli("verify --suite oracles");
    REQUIRE(r.status == 0);
    nlohmann::json j = parse_json(r.out);
    CHECK(j["suite"] == "oracles");
    CHECK(j["passed"] == true);
    CHECK(j["checks"].size() >= 3);
    for (const auto& c : j["checks"]) {
        CHECK(c["passed"] == true);
        CHECK(c["failures"] == 0);
    }
}

TEST_CASE("alternate output formats") {
    RunResult text = run_cli("--format text check --poly 0,0,1");
    REQUIRE(text.status == 0);
    CHECK(text.out.find("PASS") != std::string::npos);

    RunResult csv = run_cli("--format csv check --poly 0,0,1");
    REQUIRE(csv.status == 0);
    CHECK(csv.out.rfind("flavor,n,d,", 0) == 0);

    RunResult csv_trace = run_cli("--format csv trace --poly 0,0,1 --n 2");
    REQUIRE(csv_trace.status == 0);
    CHECK(csv_trace.out.rfind("n,d,c_re,", 0) == 0);
}

} // TEST_SUITE
