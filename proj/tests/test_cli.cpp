#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "minsec/cli.hpp"

using namespace minsec;

namespace {

std::pair<int, std::string> run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run_cli(args, out, err);
    return {code, out.str() + err.str()};
}

}  // namespace

TEST_CASE("identical invocations produce byte-identical JSON") {
    std::vector<std::string> cmd = {"ideal", "--k", "2", "--n", "5", "--s", "2", "--d", "2", "--json", "--seed", "0"};
    auto [c1, o1] = run(cmd);
    auto [c2, o2] = run(cmd);
    CHECK(c1 == 0);
    CHECK(o1 == o2);
    CHECK(o1.find("\"dimension\": 0") != std::string::npos);
}

TEST_CASE("parallel checks preserve report order and content") {
    std::vector<std::string> base = {"verify", "identities", "--family", "A:2,4", "--json"};
    auto [c1, o1] = run(base);
    std::vector<std::string> jobs = base;
    jobs.push_back("--jobs");
    jobs.push_back("3");
    auto [c2, o2] = run(jobs);
    CHECK(c1 == 0);
    CHECK(c2 == 0);
    // Identical up to the echoed command line.
    nlohmann::json j1 = nlohmann::json::parse(o1), j2 = nlohmann::json::parse(o2);
    j1.erase("command");
    j2.erase("command");
    CHECK(j1 == j2);
}

TEST_CASE("pfaffian ideal dimension through the CLI") {
    auto [code, out] = run({"ideal", "--k", "2", "--n", "6", "--s", "2", "--d", "3", "--json"});
    CHECK(code == 0);
    CHECK(out.find("\"dimension\": 1") != std::string::npos);
}

TEST_CASE("plethysm table command") {
    auto [code, out] = run({"plethysm", "s3-wedge", "--k", "2", "--dim", "6", "--json"});
    CHECK(code == 0);
    CHECK(out.find("\"nonzero_components\": 3") != std::string::npos);
    CHECK(out.find("\"agree\": false") == std::string::npos);
}

TEST_CASE("usage errors exit nonzero") {
    auto [code, out] = run({"ideal", "--bogus"});
    CHECK(code == 2);
    auto [code2, out2] = run({"verify", "identities", "--family", "E:6"});
    CHECK(code2 == 2);
}

TEST_CASE("orbit ring command") {
    auto [code, out] = run({"orbit-ring", "--k", "2", "--alpha", "3,2,1,0", "--json"});
    CHECK(code == 0);
    CHECK(out.find("\"multiplicity\": 1") != std::string::npos);
}

TEST_CASE("hwv command with checks") {
    auto [code, out] = run({"hwv", "--k", "2", "--check"});
    CHECK(code == 0);
    CHECK(out.find("OK") != std::string::npos);
}

TEST_CASE("cumulant show emits triangular expressions") {
    auto [code, out] = run({"cumulant", "show", "--family", "A:2,4", "--coords", "y", "--json"});
    CHECK(code == 0);
    CHECK(out.find("\"ok\": true") != std::string::npos);
}
