// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "boundrep/bench.hpp"
#include "boundrep/generators.hpp"
#include "boundrep/oracle.hpp"
#include "boundrep/solve.hpp"

#include "proper_checks.hpp"

#include <chrono>
#include <cstdio>
#include <string>

using namespace boundrep;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int failures = 0;

void report(int id, bool ok, const std::string& what) {
    std::printf("[%s] %d. %s\n", ok ? "PASS" : "FAIL", id, what.c_str());
    std::fflush(stdout);
    failures += !ok;
}

const SmallInstanceCounts kCorpus{10, 100, 500, 0};
constexpr std::uint64_t kSeed = 1;

struct Equivalence {
    std::size_t instances = 0, sat = 0, mismatches = 0, invalid = 0;
    double seconds = 0;
};

Equivalence equivalence(GraphClass cls) {
    Equivalence e;
    const auto t0 = Clock::now();
    for (const Instance& inst : enumerate_small_instances(kSeed, kCorpus, cls)) {
        ++e.instances;
        const SolveResult got = solve(inst);
        e.mismatches += got.sat() != brute_force_solve(inst).sat;
        if (got.sat()) {
            ++e.sat;
            e.invalid += !check_representation(inst, *got.representation).ok();
        }
    }
    e.seconds = since(t0);
    return e;
}

Graph make(int n, std::vector<std::pair<Vertex, Vertex>> edges) { return Graph(n, edges); }

bool sat_both(const Instance& inst) {
    const SolveResult r = solve(inst);
    return r.sat() && check_representation(inst, *r.representation).ok() && brute_force_solve(inst).sat;
}
bool unsat_both(const Instance& inst) { return !solve(inst).sat() && !brute_force_solve(inst).sat; }

} // namespace

int main() {
    char buf[256];

    const Equivalence in = equivalence(GraphClass::Interval);
    std::snprintf(buf, sizeof buf, "oracle equivalence, INT: %zu instances (%zu SAT), %zu mismatches, %.1f s",
                  in.instances, in.sat, in.mismatches, in.seconds);
    report(1, in.mismatches == 0 && in.seconds <= 600, buf);

    const Equivalence pr = equivalence(GraphClass::ProperInterval);
    std::snprintf(buf, sizeof buf, "oracle equivalence, PROPER INT: %zu instances (%zu SAT), %zu mismatches, %.1f s",
                  pr.instances, pr.sat, pr.mismatches, pr.seconds);
    report(2, pr.mismatches == 0 && pr.seconds <= 600, buf);

    std::snprintf(buf, sizeof buf, "witness validity: %zu of %zu SAT answers invalid", in.invalid + pr.invalid,
                  in.sat + pr.sat);
    report(3, in.invalid + pr.invalid == 0 && in.sat + pr.sat > 0, buf);

    {
        // w (vertex 2) must start after and end before the other two
        Instance k3 = Instance::unbounded(make(3, {{0, 1}, {0, 2}, {1, 2}}));
        k3.bounds[0] = k3.bounds[1] = {Bound::point(Rational(0)), Bound::point(Rational(3))};
        k3.bounds[2] = {Bound::point(Rational(1)), Bound::point(Rational(2))};
        const SolveResult r = solve(k3);
        bool ok = sat_both(k3);
        if (ok) {
            const auto& iv = r.representation->intervals;
            ok = iv[0].lo < iv[2].lo && iv[1].lo < iv[2].lo && iv[2].hi < iv[0].hi && iv[2].hi < iv[1].hi;
        }
        Instance proper = k3;
        proper.cls = GraphClass::ProperInterval;
        ok = ok && unsat_both(proper);
        report(4, ok, "class separation K3: INT SAT with w strictly inside, PROPER INT UNSAT, oracle agrees");
    }

    {
        bool ok = true;
        const Graph c4 = make(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
        const Graph claw = make(4, {{0, 1}, {0, 2}, {0, 3}});
        ok &= unsat_both(Instance::unbounded(c4, GraphClass::Interval));
        ok &= unsat_both(Instance::unbounded(c4, GraphClass::ProperInterval));
        ok &= sat_both(Instance::unbounded(claw, GraphClass::Interval));
        ok &= unsat_both(Instance::unbounded(claw, GraphClass::ProperInterval));
        int graphs = 0, solved = 0;
        for (int n : {1, 10, 100, 500, 1000, 2000})
            for (std::uint64_t seed = 1; seed <= 10; ++seed) {
                const Instance gen = generate({GenKind::RandomInterval, n, seed, true, GraphClass::Interval});
                const Instance inst = Instance::unbounded(gen.graph, GraphClass::Interval);
                const SolveResult r = solve(inst);
                ++graphs;
                solved += r.sat() && check_representation(inst, *r.representation).ok();
            }
        std::snprintf(buf, sizeof buf,
                      "infinite bounds: C4 UNSAT both, claw INT SAT / PROPER UNSAT (%s); random interval graphs "
                      "n <= 2000: %d of %d INT SAT",
                      ok ? "ok" : "wrong", solved, graphs);
        report(5, ok && solved == graphs, buf);
    }

    {
        checks::LeftmostStats st;
        const auto t0 = Clock::now();
        for (const Instance& inst : enumerate_small_instances(kSeed, kCorpus, GraphClass::ProperInterval))
            checks::check_leftmost(inst, st);
        std::snprintf(buf, sizeof buf,
                      "leftmost representation: %d reduced components, %lld oracle reps, %lld meets, %d "
                      "violations (%d enumerations capped), %.1f s",
                      st.components, st.reps, st.pairs, st.violations, st.truncated, since(t0));
        report(6, st.violations == 0 && st.components > 0, buf);
    }

    {
        const std::vector<int> int_sizes = {10000, 20000, 40000, 80000};
        const std::vector<int> proper_sizes = {500, 1000, 2000, 4000};
        auto t0 = Clock::now();
        const BenchReport a = run_bench(GraphClass::Interval, int_sizes, kSeed);
        const double ta = since(t0);
        t0 = Clock::now();
        const BenchReport b = run_bench(GraphClass::ProperInterval, proper_sizes, kSeed);
        const double tb = since(t0);
        std::snprintf(buf, sizeof buf, "scaling: INT slope %.3f (<= 1.3, %.1f s), PROPER INT slope %.3f (<= 2.3, %.1f s)",
                      a.slope, ta, b.slope, tb);
        report(7, a.slope <= 1.3 && b.slope <= 2.3 && ta <= 60 && tb <= 60, buf);
    }

    {
        int bad = 0;
        std::size_t count = 0;
        for (auto cls : {GraphClass::Interval, GraphClass::ProperInterval})
            for (const Instance& inst : enumerate_small_instances(kSeed, kCorpus, cls)) {
                bad += checks::handle_violations(inst);
                ++count;
            }
        std::snprintf(buf, sizeof buf, "handle characterization: %zu instances, %d violations", count, bad);
        report(8, bad == 0, buf);
    }

    std::printf("%s\n", failures == 0 ? "all criteria passed" : "some criteria failed");
    return failures == 0 ? 0 : 1;
}
