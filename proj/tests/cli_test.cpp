// End-to-end checks of the command-line surface: flags, formats, exit
// codes, and byte-level reproducibility.

#include <doctest.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string command = std::string(SSCHUR_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult result;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buffer;
    std::size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.output.append(buffer.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        const std::size_t end = text.find('\n', start);
        if (end == std::string::npos) {
            lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    return lines;
}

} // namespace

TEST_CASE("multicritical prints the quadratic family as json") {
    const RunResult r = run_cli("multicritical --p 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"t\":{\"1\":0.5}") != std::string::npos);
    CHECK(r.output.find("\"a\":2.0") != std::string::npos);
}

TEST_CASE("limit-shape grid includes the origin row") {
    const RunResult r = run_cli("limit-shape --p 2 --grid 4 --xmax 2");
    CHECK(r.exit_code == 0);
    const auto lines = lines_of(r.output);
    REQUIRE(lines.size() >= 6);
    CHECK(lines[0] == "x,omega,density");
    // x = 0 row carries 4/pi
    CHECK(lines[1].rfind("0,", 0) == 0);
    const double omega0 = std::strtod(lines[1].c_str() + 2, nullptr);
    CHECK(std::abs(omega0 - 1.2732395447351628) < 1e-7);
}

TEST_CASE("weights carries the header and the vacuum row") {
    const RunResult r = run_cli("weights --p 2 --max-size 3");
    CHECK(r.exit_code == 0);
    const auto lines = lines_of(r.output);
    REQUIRE(lines.size() >= 2);
    CHECK(lines[0] == "partition,length,size,Q,weight,probability");
    CHECK(lines[1].rfind(",0,0,1,1,", 0) == 0); // empty partition row
}

TEST_CASE("csv output is byte-identical across runs") {
    for (const std::string& args :
         {std::string("jtable --p 2"), std::string("sample --p 2 --count 5 --seed 7"),
          std::string("kernel --p 2 --points 1,-1,2,3")}) {
        const RunResult first = run_cli(args);
        const RunResult second = run_cli(args);
        CHECK(first.exit_code == 0);
        CHECK(first.output == second.output);
        CHECK_FALSE(first.output.empty());
    }
}

TEST_CASE("thread cap does not change the bytes") {
    const std::string args = "limit-shape --p 4 --grid 40 --xmax 3";
    const RunResult many = run_cli(args);
    setenv("THREADS", "1", 1);
    const RunResult one = run_cli(args);
    unsetenv("THREADS");
    CHECK(many.exit_code == 0);
    CHECK(one.exit_code == 0);
    CHECK(many.output == one.output);
}

TEST_CASE("gap and correlation emit value and error columns") {
    const RunResult corr = run_cli("correlation --p 2 --points 1,3,5");
    CHECK(corr.exit_code == 0);
    CHECK(lines_of(corr.output)[0] == "points,value,error_bound");

    const RunResult gap = run_cli("gap --p 2 --interval 2..6");
    CHECK(gap.exit_code == 0);
    CHECK(lines_of(gap.output)[0] == "interval,value,error_bound");
}

TEST_CASE("sample json format emits arrays largest first") {
    const RunResult r = run_cli("sample --p 2 --count 3 --seed 3 --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.output.front() == '[');
}

TEST_CASE("exit codes distinguish usage, validation, and consistency") {
    CHECK(run_cli("no-such-command").exit_code == 1);
    CHECK(run_cli("multicritical").exit_code == 1);         // missing required --p
    CHECK(run_cli("multicritical --p 3").exit_code == 2);   // odd degree rejected
    CHECK(run_cli("weights --max-size 3").exit_code == 2);  // no parameter source
    CHECK(run_cli("jtable --p 2 --t-file x.json").exit_code == 1); // mutually exclusive
    CHECK(run_cli("tw --p 2 --smin 0 --smax 1 --step -1").exit_code == 2);
}

TEST_CASE("edge-converge emits one row per mesh and argument") {
    const RunResult r = run_cli("edge-converge --p 2 --target j --eps 0.25,0.2 --args 0,1");
    CHECK(r.exit_code == 0);
    const auto lines = lines_of(r.output);
    REQUIRE(lines.size() >= 5);
    CHECK(lines[0] == "target,p,epsilon,args,finite_value,limit_value,abs_error");
    CHECK(lines[1].rfind("j,2,0.25,", 0) == 0);
}

TEST_CASE("airy grid emits the function and its slope") {
    const RunResult r = run_cli("airy --p 2 --xmin 0 --xmax 0.2 --step 0.1");
    CHECK(r.exit_code == 0);
    const auto lines = lines_of(r.output);
    REQUIRE(lines.size() >= 4);
    CHECK(lines[0] == "x,Ai_p,dAi_p");
    const double ai0 = std::strtod(lines[1].c_str() + 2, nullptr);
    CHECK(std::abs(ai0 - 0.3550280538878172) < 1e-8);
}

TEST_CASE("quick verification suite passes end to end") {
    const RunResult r = run_cli("verify --suite quick");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("criterion  1 (normalization): PASS") != std::string::npos);
    CHECK(r.output.find("FAIL") == std::string::npos);
}
