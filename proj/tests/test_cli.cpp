#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "kinu/zeros.hpp"

namespace {

struct RunResult {
    int exit_code;
    std::string output; // stdout and stderr interleaved
};

// Runs the installed CLI through the shell; `prefix` may set environment
// variables for the child.
RunResult run_cli(const std::string& args, const std::string& prefix = "") {
    std::string cmd = prefix + " '" + KINU_CLI_PATH + "' " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof(buf), pipe)) out.append(buf, n);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

} // namespace

TEST_CASE("reference table reproduces and reports success") {
    RunResult r = run_cli("table1");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("all rows PASS") != std::string::npos);
    CHECK(r.output.find("FAIL") == std::string::npos);
}

TEST_CASE("out-of-domain x is a usage error") {
    RunResult r = run_cli("eval --x 0 --nu 1");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("x must be positive") != std::string::npos);
}

TEST_CASE("eval emits the documented CSV header") {
    RunResult r = run_cli("eval --x 1 --nu 2 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.output.rfind("nu,value,est_error,method", 0) == 0);
}

TEST_CASE("zeros --refine reproduces the documented n = 5 values") {
    RunResult r = run_cli("zeros --x 1 --n 5 --order 3 --refine --format json");
    REQUIRE(r.exit_code == 0);
    auto doc = nlohmann::json::parse(r.output);
    REQUIRE(doc["rows"].size() == 1);
    const auto& row = doc["rows"][0];
    CHECK(std::fabs(row["estimate"].get<double>() - 9.3550938860) < 1e-9);
    CHECK(std::fabs(row["refined"].get<double>() - 9.3550938258) < 1e-9);
    CHECK(doc["tool_version"] == "1.0.0");
    CHECK(doc["command"] == "zeros");
}

TEST_CASE("envelope values round-trip against the library") {
    RunResult r = run_cli("zeros --x 1 --n 2 --format json");
    REQUIRE(r.exit_code == 0);
    auto doc = nlohmann::json::parse(r.output);
    const auto& row = doc["rows"][0];
    CHECK(row["xi"].get<double>() == doctest::Approx(kinu::xi_base(2, 1.0)).epsilon(1e-14));
    CHECK(row["estimate"].get<double>() ==
          doctest::Approx(kinu::estimate_zero(2, 1.0, 3)).epsilon(1e-14));
}

TEST_CASE("wcheck output is deterministic") {
    RunResult a = run_cli("wcheck --format csv");
    RunResult b = run_cli("wcheck --format csv");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(a.output.rfind("z,", 0) == 0);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("eval --x 1 --nu 2 --no-such-flag").exit_code == 2);
    CHECK(run_cli("zeros --x 1 --n 0").output.find("n must be >= 1") != std::string::npos);
    CHECK(run_cli("zeros --x 1 --n 0").exit_code == 2);
    CHECK(run_cli("eval --x 1").exit_code == 2);
    CHECK(run_cli("zeros --x 1").exit_code == 2);
    CHECK(run_cli("zeros --x 1 --n 3 --refine --tol 1e-14").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
}

TEST_CASE("scan reports at least the known sub-threshold zero") {
    RunResult r = run_cli("zeros --x 1 --scan --below 4.53 --format csv");
    CHECK(r.exit_code == 0);
    // header plus one data line
    CHECK(r.output.find('\n') != std::string::npos);
    CHECK(r.output.find("2.9625485") != std::string::npos);
}

TEST_CASE("KINU_DIGITS raises the default working precision") {
    RunResult r = run_cli("eval --x 1 --nu 2 --format json", "KINU_DIGITS=12");
    REQUIRE(r.exit_code == 0);
    auto doc = nlohmann::json::parse(r.output);
    CHECK(doc["params"]["digits"] == 12);
    int expected = static_cast<int>(std::ceil(0.6822 * 2.0)) + 12 + 10;
    CHECK(doc["rows"][0]["working_digits"] == expected);
    // the value string carries the requested digits
    std::string v = doc["rows"][0]["value"].get<std::string>();
    CHECK(v.substr(0, 7) == "1.86553");
}
