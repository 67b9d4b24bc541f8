// Drives the installed CLI binary end to end: exit codes, document files,
// and byte-identical output across thread counts.

#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef CHSHQ_CLI_PATH
#error "CHSHQ_CLI_PATH must point at the CLI binary"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string stdout_text;
};

std::string temp_path(const std::string& name) {
    return std::string("/tmp/chshq_test_") + std::to_string(::getpid()) + "_" + name;
}

RunResult run_cli(const std::string& args) {
    std::string out_file = temp_path("stdout");
    std::string cmd = std::string(CHSHQ_CLI_PATH) + " " + args + " > " + out_file + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    RunResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_file);
    std::stringstream buffer;
    buffer << in.rdbuf();
    result.stdout_text = buffer.str();
    std::remove(out_file.c_str());
    return result;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("bounds subcommand") {
    RunResult ok = run_cli("bounds --q 2");
    CHECK(ok.exit_code == 0);
    auto doc = nlohmann::json::parse(ok.stdout_text);
    CHECK(doc["quantum_upper_bound"].get<double>() == doctest::Approx(0.853553390593).epsilon(1e-9));
    CHECK(doc["trivial_win_count"] == 3);

    CHECK(run_cli("bounds --q 1").exit_code == 2);

    RunResult nonprime = run_cli("bounds --q 12");
    CHECK(nonprime.exit_code == 0);
    CHECK(nlohmann::json::parse(nonprime.stdout_text)["prime"] == false);
}

TEST_CASE("construct and evaluate round-trip") {
    std::string strategy_file = temp_path("s101.json");
    RunResult built = run_cli("construct --p 101 --out " + strategy_file);
    REQUIRE(built.exit_code == 0);
    auto report = nlohmann::json::parse(built.stdout_text);
    CHECK(report["p1"] == 4);
    CHECK(report["lines_total"] == 24);

    RunResult evaluated = run_cli("evaluate --path " + strategy_file);
    CHECK(evaluated.exit_code == 0);
    auto ev = nlohmann::json::parse(evaluated.stdout_text);
    CHECK(ev["win_count"] == report["win_count"]);
    CHECK(ev["win_count"].get<std::uint64_t>() >=
          report["post_incidence_count"].get<std::uint64_t>());
    std::remove(strategy_file.c_str());
}

TEST_CASE("construct rejects composites and tiny primes") {
    CHECK(run_cli("construct --p 6 --out /tmp/never.json").exit_code == 2);
    CHECK(run_cli("construct --p 7 --out /tmp/never.json").exit_code == 3);
}

TEST_CASE("evaluate builtin strategies") {
    RunResult trivial = run_cli("evaluate --p 3 --builtin trivial");
    CHECK(trivial.exit_code == 0);
    CHECK(nlohmann::json::parse(trivial.stdout_text)["win_count"] == 5);

    CHECK(run_cli("evaluate --p 4 --builtin trivial").exit_code == 2);
    CHECK(run_cli("evaluate --builtin trivial").exit_code == 2);
}

TEST_CASE("evaluate rejects malformed documents with exit 4") {
    std::string path = temp_path("broken.json");
    std::ofstream(path) << "{\"q\": 5, \"alice\": [0, 0";  // truncated
    CHECK(run_cli("evaluate --path " + path).exit_code == 4);

    std::ofstream(path) << "{\"q\": 5, \"alice\": [0,0,0,0,0], \"bob\": [0,0,0]}";
    CHECK(run_cli("evaluate --path " + path).exit_code == 4);
    std::remove(path.c_str());
}

TEST_CASE("audit subcommand and csv export") {
    RunResult ok = run_cli("audit --p 101");
    CHECK(ok.exit_code == 0);
    auto doc = nlohmann::json::parse(ok.stdout_text);
    CHECK(doc["middle_band_violations"] == 0);
    CHECK(doc["census_match"] == true);

    CHECK(run_cli("audit --p 4").exit_code == 2);

    RunResult csv = run_cli("audit --p 101 --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.stdout_text.rfind("k,band,solution_count\n", 0) == 0);
    // header + one row per k in [1, 101)
    std::size_t newlines = 0;
    for (char c : csv.stdout_text)
        if (c == '\n') ++newlines;
    CHECK(newlines == 101);
}

TEST_CASE("oracle subcommand") {
    RunResult ok = run_cli("oracle --q 2");
    CHECK(ok.exit_code == 0);
    auto doc = nlohmann::json::parse(ok.stdout_text);
    CHECK(doc["max_wins"] == 3);
    CHECK(doc["optimal_value"]["numerator"] == 3);
    CHECK(doc["optimal_value"]["denominator"] == 4);

    CHECK(run_cli("oracle --q 11").exit_code == 6);
    CHECK(run_cli("oracle --q 9").exit_code == 2);  // not prime
}

TEST_CASE("outputs are byte-identical across thread counts") {
    RunResult one = run_cli("evaluate --p 101 --builtin explicit --threads 1");
    RunResult four = run_cli("evaluate --p 101 --builtin explicit --threads 4");
    CHECK(one.exit_code == 0);
    CHECK(one.stdout_text == four.stdout_text);

    RunResult audit_one = run_cli("audit --p 1499 --threads 1");
    RunResult audit_three = run_cli("audit --p 1499 --threads 3");
    CHECK(audit_one.stdout_text == audit_three.stdout_text);

    std::string f1 = temp_path("t1.json"), f2 = temp_path("t2.json");
    CHECK(run_cli("construct --p 1499 --out " + f1 + " --threads 1").exit_code == 0);
    CHECK(run_cli("construct --p 1499 --out " + f2 + " --threads 4").exit_code == 0);
    std::ifstream in1(f1), in2(f2);
    std::stringstream b1, b2;
    b1 << in1.rdbuf();
    b2 << in2.rdbuf();
    CHECK(b1.str() == b2.str());
    CHECK(!b1.str().empty());
    std::remove(f1.c_str());
    std::remove(f2.c_str());
}

TEST_CASE("unknown flags and missing subcommands fail with exit 2") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("construct --nope 1").exit_code == 2);
}

}  // TEST_SUITE
