#include "boundrep/bench.hpp"

#include "boundrep/generators.hpp"
#include "boundrep/interval_solver.hpp"
#include "boundrep/proper_solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <set>
#include <stdexcept>

namespace boundrep {

double loglog_slope(std::span<const BenchPoint> points) {
    std::set<int> sizes;
    for (const auto& p : points) {
        if (p.n <= 0 || !(p.seconds > 0)) throw std::invalid_argument("sizes and times must be positive");
        sizes.insert(p.n);
    }
    if (sizes.size() < 4) throw std::invalid_argument("need at least four distinct sizes for a slope");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double k = static_cast<double>(points.size());
    for (const auto& p : points) {
        const double x = std::log(p.n), y = std::log(p.seconds);
        sx += x, sy += y, sxx += x * x, sxy += x * y;
    }
    return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

BenchReport run_bench(GraphClass cls, std::span<const int> sizes, std::uint64_t seed, int reps) {
    BenchReport report;
    const auto kind = cls == GraphClass::ProperInterval ? GenKind::RandomProper : GenKind::RandomInterval;
    for (int n : sizes) {
        const Instance inst = generate({kind, n, seed + static_cast<std::uint64_t>(n), true, cls});
        const Line line = Line::of_instance(inst);
        double best = 0;
        for (int r = 0; r < std::max(reps, 1); ++r) {
            const auto t0 = std::chrono::steady_clock::now();
            const SolveResult res = cls == GraphClass::ProperInterval ? solve_bounded_proper(inst, line)
                                                                      : solve_bounded_interval(inst, line);
            const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            report.total_seconds += s;
            if (!res.sat() || !check_representation(inst, *res.representation).ok())
                throw std::runtime_error("benchmark instance of size " + std::to_string(n) + " was not solved");
            best = r == 0 ? s : std::min(best, s);
        }
        report.points.push_back({n, std::max(best, 1e-9), static_cast<long long>(inst.graph.m())});
    }
    report.slope = loglog_slope(report.points);
    return report;
}

} // namespace boundrep
