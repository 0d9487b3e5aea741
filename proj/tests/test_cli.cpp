#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
// End-to-end checks of the installed CLI binary: golden tables, exit codes,
// output determinism. The binary path and fixture dir come from the build.

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

struct RunResult {
    int exit_code;
    std::string output;  // stdout + stderr
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    std::array<char, 4096> buffer;
    std::size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        output.append(buffer.data(), got);
    }
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

std::string fixture(const std::string& name) {
    std::ifstream in(std::string(FIXTURE_DIR) + "/" + name);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

TEST_CASE("count subcommand") {
    auto r = run("count --family t --p 2 --n 8 --k 8");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "40320\n");

    r = run("count --family y --p 2 --n 10 --k 5");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "2251008\n");

    r = run("count --family t --p 2 --n 3 --k 1");
    CHECK(r.output == "14\n");
}

TEST_CASE("invalid config exits 2") {
    CHECK(run("count --family q --p 2 --n 3 --k 1").exit_code == 2);
    CHECK(run("count --family t --p 1 --n 3 --k 1").exit_code == 2);
    CHECK(run("table --family t --p 2 --n 5..2").exit_code == 2);
    CHECK(run("bogus").exit_code == 2);
    CHECK(run("sample --p 2").exit_code == 2);  // missing --n
}

TEST_CASE("csv tables match the transcribed references byte for byte") {
    auto y = run("table --family y --p 2 --n 0..10 --format csv");
    CHECK(y.exit_code == 0);
    CHECK(y.output == fixture("table_y_p2.csv"));

    auto t = run("table --family t --p 2 --n 0..8 --format csv");
    CHECK(t.exit_code == 0);
    CHECK(t.output == fixture("table_t_p2.csv"));
}

TEST_CASE("single-cell f table") {
    auto r = run("table --family f --p 2 --n 0..0 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "0,1\n");
}

TEST_CASE("verify exit codes") {
    auto ok = run("verify --p 2 --n 0..4");
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("PASS t(4,1)") != std::string::npos);
    CHECK(ok.output.find("FAIL") == std::string::npos);

    auto budget = run("verify --p 2 --n 0..9 --budget 1000");
    CHECK(budget.exit_code == 3);
}

TEST_CASE("budget env var override") {
    std::string cmd = std::string("PARY_MD_BUDGET=500 ") + CLI_PATH +
                      " verify --p 2 --n 0..9 >/dev/null 2>&1; echo $?";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buffer[16] = {0};
    REQUIRE(fgets(buffer, sizeof buffer, pipe) != nullptr);
    pclose(pipe);
    CHECK(std::string(buffer) == "3\n");
}

TEST_CASE("sample json output is deterministic and carries exact expectations") {
    std::string args = "sample --p 2 --n 3 --trials 2000 --seed 7 --format json";
    auto a = run(args);
    auto b = run(args);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(a.output.find("\"1\": \"14/30\"") != std::string::npos);
    CHECK(a.output.find("\"2\": \"10/30\"") != std::string::npos);
    CHECK(a.output.find("\"3\": \"6/30\"") != std::string::npos);
    CHECK(a.output.find("\"seed\": 7") != std::string::npos);

    auto trivial = run("sample --p 2 --n 1 --trials 10 --format json");
    CHECK(trivial.output.find("\"1\": 10") != std::string::npos);
}

TEST_CASE("encode subcommand") {
    auto r = run("encode '(3,(1,_,_),(5,_,(4,_,_)))'");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("md_size: 2") != std::string::npos);
    CHECK(r.output.find("md_subtree: (3,(1,_,_),_)") != std::string::npos);

    CHECK(run("encode '(1,_'").exit_code == 2);
}
