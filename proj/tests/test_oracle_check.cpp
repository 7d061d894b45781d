#include "doctest.h"

#include "boundrep/oracle_check.hpp"

#include <cstdlib>

using namespace boundrep;

TEST_CASE("clean run has no mismatches") {
    for (auto cls : {GraphClass::Interval, GraphClass::ProperInterval}) {
        OracleCheckOptions opt;
        opt.cls = cls;
        opt.counts = {3, 10, 100, 0};
        const auto r = oracle_check(opt);
        CHECK(r.checked > 0);
        CHECK(r.sat > 0);
        CHECK(r.mismatches == 0);
        CHECK(!r.first_counterexample);
    }
}

TEST_CASE("injected bug is caught, independent of threads") {
    OracleCheckOptions opt;
    opt.counts = {3, 10, 100, 0};
    opt.inject_bug = true;
    opt.threads = 1;
    const auto one = oracle_check(opt);
    opt.threads = 4;
    const auto four = oracle_check(opt);
    CHECK(one.mismatches > 0);
    CHECK(one.mismatches == four.mismatches);
    REQUIRE(one.first_counterexample);
    REQUIRE(four.first_counterexample);
    CHECK(one.first_counterexample->bounds == four.first_counterexample->bounds);
}

TEST_CASE("thread cap from the environment") {
    setenv("BOUNDREP_THREADS", "2", 1);
    CHECK(worker_count(8) == 2);
    CHECK(worker_count(1) == 1);
    setenv("BOUNDREP_THREADS", "junk", 1);
    CHECK(worker_count(3) == 3);
    unsetenv("BOUNDREP_THREADS");
    CHECK(worker_count(5) == 5);
}
