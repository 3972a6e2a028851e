#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <set>
#include <string>

#include "json.hpp"

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

const char* cli_path() { return std::getenv("ANNIH_CLI"); }

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(cli_path()) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

}  // namespace

TEST_CASE("rset mt1 emits a parseable certificate") {
    if (!cli_path()) return;  // only meaningful when the build system points at the binary
    auto r = run_cli("rset mt1 --q 23");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["schema"] == "rset-cert/1");
    CHECK(j["overall"] == "Valid");
    std::set<int> fs;
    for (const auto& m : j["memberships"])
        if (m["base"] == "Q") fs.insert(m["f"].get<int>());
    CHECK(fs == std::set<int>{1, 11});
}

TEST_CASE("repeated runs are byte-identical") {
    if (!cli_path()) return;
    auto a = run_cli("rset mt1 --q 23");
    auto b = run_cli("rset mt1 --q 23");
    CHECK(a.out == b.out);
    auto c = run_cli("quad class-number --d 79");
    auto d = run_cli("quad class-number --d 79");
    CHECK(c.out == d.out);
}

TEST_CASE("stickelberger membership query") {
    if (!cli_path()) return;
    auto r = run_cli("stickelberger --p 23 --member \"1*s1 + 1*s5\"");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["member"] == false);
    CHECK(j["refutation"]["contradiction"] == true);

    std::string trace = "1*s1";
    for (int k = 2; k <= 22; ++k) trace += " + 1*s" + std::to_string(k);
    auto rt = run_cli("stickelberger --p 23 --member \"" + trace + "\"");
    auto jt = nlohmann::json::parse(rt.out);
    CHECK(jt["member"] == true);
}

TEST_CASE("table format renders without JSON syntax") {
    if (!cli_path()) return;
    auto r = run_cli("rset mt1 --q 23 --format table");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("Valid") != std::string::npos);
    CHECK(r.out.find('{') == std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
    if (!cli_path()) return;
    CHECK(run_cli("rset mt1").exit_code == 2);          // missing --q
    CHECK(run_cli("nonsense").exit_code == 2);          // unknown subcommand
    CHECK(run_cli("rset mt1 --q 21").exit_code == 2);   // hypothesis shape violation
    CHECK(run_cli("quad pell --kind P4 --n 16 --m 4").exit_code == 1);  // square m: domain failure
}

TEST_CASE("failed verification exits with code 1") {
    if (!cli_path()) return;
    auto r = run_cli("rset biquadratic --u 7");
    CHECK(r.exit_code == 0);  // Invalid is still a successfully produced certificate
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["overall"] == "Invalid");
}
