#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>

#include "annih/verify.hpp"

using namespace annih;

// Runs the full verification suite once and reports one line per criterion.
TEST_CASE("acceptance: full verification suite") {
    auto report = verify_paper(true);
    REQUIRE(report.items.size() == 8);
    for (const auto& item : report.items) {
        std::printf("%s  %-16s %s\n", item.pass ? "pass" : "FAIL", item.id.c_str(),
                    item.detail.c_str());
        std::fflush(stdout);
        INFO(item.id, ": ", item.detail);
        CHECK(item.pass);
    }
    CHECK(report.all_pass());
}
