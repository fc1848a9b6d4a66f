// Full verification suite: one test case per criterion, each printing its
// PASS/FAIL line with the measured figures.

#include "acceptance.hpp"

#include <doctest.h>

#include <cstdio>

TEST_CASE("verification criteria") {
    const auto results = sschur::checks::run_acceptance(false);
    for (const auto& r : results) {
        CAPTURE(r.index);
        CAPTURE(r.name);
        CAPTURE(r.detail);
        std::printf("criterion %2d (%s): %s (%.1f s) %s\n", r.index, r.name.c_str(),
                    r.passed ? "PASS" : "FAIL", r.seconds, r.detail.c_str());
        std::fflush(stdout);
        CHECK(r.passed);
    }
    REQUIRE(results.size() == 10);
}
