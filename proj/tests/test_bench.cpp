#include "doctest.h"

#include "boundrep/bench.hpp"

#include <cmath>
#include <stdexcept>

using namespace boundrep;

TEST_CASE("slope of exact power laws") {
    for (double e : {1.0, 2.0, 0.5}) {
        std::vector<BenchPoint> pts;
        for (int n : {10, 20, 40, 80, 160}) pts.push_back({n, 1e-3 * std::pow(n, e)});
        CHECK(loglog_slope(pts) == doctest::Approx(e).epsilon(1e-9));
    }
}

TEST_CASE("too few sizes") {
    std::vector<BenchPoint> pts = {{10, 1}, {20, 2}, {40, 4}};
    CHECK_THROWS_AS(loglog_slope(pts), std::invalid_argument);
    pts.push_back({40, 4});
    CHECK_THROWS_AS(loglog_slope(pts), std::invalid_argument);
    pts.push_back({80, 0});
    CHECK_THROWS_AS(loglog_slope(pts), std::invalid_argument);
}

TEST_CASE("small benchmark runs") {
    const std::vector<int> sizes = {50, 100, 200, 400};
    for (auto cls : {GraphClass::Interval, GraphClass::ProperInterval}) {
        const BenchReport r = run_bench(cls, sizes, 7, 1);
        CHECK(r.points.size() == 4);
        CHECK(std::isfinite(r.slope));
    }
}
