#ifndef BOUNDREP_BENCH_HPP
#define BOUNDREP_BENCH_HPP

#include "boundrep/instance.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace boundrep {

struct BenchPoint {
    int n = 0;
    double seconds = 0;
    long long edges = 0;
};

/// Least-squares slope of log(seconds) against log(n).
/// Throws std::invalid_argument with fewer than four distinct sizes or a
/// non-positive value.
double loglog_slope(std::span<const BenchPoint> points);

struct BenchReport {
    std::vector<BenchPoint> points;
    double slope = 0;
    double total_seconds = 0;
};

/// Times the solver of `cls` on satisfiable generated instances, keeping the
/// fastest of `reps` runs per size. Sorting the endpoints is done before the
/// clock starts. Throws std::runtime_error if a generated instance comes
/// back UNSAT or with an invalid representation.
BenchReport run_bench(GraphClass cls, std::span<const int> sizes, std::uint64_t seed, int reps = 3);

} // namespace boundrep

#endif
