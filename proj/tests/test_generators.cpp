#include "doctest.h"

#include "boundrep/generators.hpp"
#include "boundrep/json_io.hpp"
#include "boundrep/oracle.hpp"
#include "boundrep/solve.hpp"

using namespace boundrep;

namespace {

// witness intervals satisfy every bound they were drawn around
bool fits(const Instance& inst, const std::vector<Interval>& ivs) {
    return check_representation(inst, Representation{ivs}).ok();
}

} // namespace

TEST_CASE("graph of intervals") {
    const std::vector<Interval> ivs = {{Rational(0), Rational(2)}, {Rational(2), Rational(3)},
                                       {Rational(4), Rational(5)}, {Rational(1), Rational(4)}};
    const Graph g = graph_of_intervals(ivs);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(0, 3));
    CHECK(g.adjacent(1, 3));
    CHECK(g.adjacent(2, 3));
    CHECK(!g.adjacent(0, 2));
    CHECK(!g.adjacent(1, 2));
}

TEST_CASE("same seed, same bytes") {
    for (auto kind : {GenKind::RandomInterval, GenKind::RandomProper, GenKind::Repext, GenKind::Adversarial}) {
        const GenOptions opt{kind, 50, 99, false, GraphClass::Interval};
        CHECK(instance_to_json(generate(opt)) == instance_to_json(generate(opt)));
        GenOptions other = opt;
        other.seed = 100;
        CHECK(instance_to_json(generate(opt)) != instance_to_json(generate(other)));
    }
}

TEST_CASE("sat-only instances contain their witness") {
    for (auto kind : {GenKind::RandomInterval, GenKind::RandomProper, GenKind::Repext, GenKind::Adversarial})
        for (auto cls : {GraphClass::Interval, GraphClass::ProperInterval})
            for (std::uint64_t seed = 1; seed <= 30; ++seed) {
                const Generated gen = generate_with_witness({kind, 40, seed, true, cls});
                INFO(to_string(kind) << " seed " << seed);
                CHECK(fits(gen.instance, gen.witness));
                const SolveResult r = solve(gen.instance);
                CHECK(r.sat());
                if (r.sat()) CHECK(check_representation(gen.instance, *r.representation).ok());
            }
}

TEST_CASE("repext pins at least one interval") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const Instance inst = generate({GenKind::Repext, 3, seed, false, GraphClass::Interval});
        int pinned = 0;
        for (const auto& b : inst.bounds)
            pinned += b.left.lo == b.left.hi && b.right.lo == b.right.hi && b.left.lo.finite();
        CHECK(pinned >= 1);
    }
}

TEST_CASE("perturbed instances agree with the oracle") {
    int sat = 0, unsat = 0;
    for (auto kind : {GenKind::RandomInterval, GenKind::Adversarial})
        for (auto cls : {GraphClass::Interval, GraphClass::ProperInterval})
            for (std::uint64_t seed = 1; seed <= 150; ++seed) {
                const Instance inst = generate({kind, 6, seed, false, cls});
                const bool got = solve(inst).sat();
                CHECK(got == brute_force_solve(inst, 6).sat);
                (got ? sat : unsat)++;
            }
    CHECK(sat > 0);
    CHECK(unsat > 0);
}
