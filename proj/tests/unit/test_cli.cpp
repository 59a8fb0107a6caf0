// End-to-end checks of the command-line front end: pinned exit codes, the
// canonical partition for the constant gauge, and the save/verify round
// trip. The binary path is injected at compile time.

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <string>

#include "doctest.h"
#include "ivi/rational.hpp"
#include "ivi/report.hpp"

namespace {

struct CliRun {
    int exit_code = -1;
    std::string out;
};

CliRun run_cli(const std::string& args) {
    std::string cmd = std::string(IVI_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = ::popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    CliRun r;
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int status = ::pclose(p);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("cousin run exits 0 with the marching partition and re-verifies") {
    CliRun r = run_cli("cousin --gauge '3/10' --interval 0 1");
    CHECK(r.exit_code == 0);
    ivi::Json report = ivi::Json::parse(r.out);
    CHECK(report.at("instance") == "cousin");
    CHECK(report.at("outcome").at("status") == "certificate");
    const ivi::Json& cuts = report.at("outcome").at("certificate").at("cuts");
    REQUIRE(cuts.is_array());
    std::vector<std::string> expect = {"0", "3/10", "3/5", "9/10", "1"};
    REQUIRE(cuts.size() == expect.size());
    for (std::size_t i = 0; i < expect.size(); ++i)
        CHECK(cuts[i].get<std::string>() == expect[i]);

    auto path = std::filesystem::temp_directory_path() / "ivi_cli_cousin.json";
    CliRun saved = run_cli("cousin --gauge '3/10' --interval 0 1 --json '" +
                           path.string() + "'");
    CHECK(saved.exit_code == 0);
    CliRun verified = run_cli("verify --report '" + path.string() + "'");
    CHECK(verified.exit_code == 0);
    std::filesystem::remove(path);
}

TEST_CASE("sign refutation exits 1 and localizes a leaf containing 1/2") {
    CliRun r = run_cli("sign --fn 'x - 1/2' --interval 0 1");
    CHECK(r.exit_code == 1);
    ivi::Json report = ivi::Json::parse(r.out);
    CHECK(report.at("outcome").at("status") == "failure");
    const ivi::Json& leaf = report.at("outcome").at("failure").at("leaf");
    ivi::Rational lo = ivi::Rational::from_string(leaf.at("lo").get<std::string>());
    ivi::Rational hi = ivi::Rational::from_string(leaf.at("hi").get<std::string>());
    CHECK(lo <= ivi::Rational(1, 2));
    CHECK(ivi::Rational(1, 2) <= hi);
}

TEST_CASE("verifying a nonexistent report exits 3") {
    CliRun r = run_cli("verify --report '/nonexistent/ivi_no_such_report.json'");
    CHECK(r.exit_code == 3);
}
