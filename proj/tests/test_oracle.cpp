#include "doctest.h"

#include "boundrep/oracle.hpp"

using namespace boundrep;

namespace {

Graph make(int n, std::vector<std::pair<Vertex, Vertex>> e) { return Graph(n, e); }

Bound iv(std::int64_t a, std::int64_t b) { return Bound(ExtCoord(a), ExtCoord(b)); }

} // namespace

TEST_CASE("oracle small cases") {
    CHECK(brute_force_solve(Instance::unbounded(make(2, {{0, 1}}))).sat);
    CHECK_FALSE(brute_force_solve(Instance::unbounded(make(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}))).sat);

    Instance forced = Instance::unbounded(make(2, {}));
    for (auto& b : forced.bounds) b = {iv(5, 5), iv(5, 5)};
    CHECK_FALSE(brute_force_solve(forced).sat);
    forced.graph = make(2, {{0, 1}});
    CHECK(brute_force_solve(forced).sat);

    // claw is an interval graph but not a proper one
    const Graph claw = make(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(brute_force_solve(Instance::unbounded(claw)).sat);
    CHECK_FALSE(brute_force_solve(Instance::unbounded(claw, GraphClass::ProperInterval)).sat);

    CHECK_THROWS_AS(brute_force_solve(Instance::unbounded(Graph(7))), TooLarge);
}

TEST_CASE("oracle witnesses are valid") {
    const auto instances = enumerate_small_instances(5, {3, 10, 200, 20}, GraphClass::Interval);
    int sat = 0;
    for (const auto& inst : instances) {
        auto r = brute_force_solve(inst);
        if (!r.sat) continue;
        ++sat;
        REQUIRE(r.witness);
        CHECK(check_representation(inst, *r.witness).ok());
    }
    CHECK(sat > 50);
    const auto proper = enumerate_small_instances(6, {3, 10, 200, 20}, GraphClass::ProperInterval);
    for (const auto& inst : proper) {
        auto r = brute_force_solve(inst);
        if (r.sat) CHECK(check_representation(inst, *r.witness).ok());
    }
}

TEST_CASE("oracle is monotone under relaxing bounds") {
    const auto instances = enumerate_small_instances(17, {0, 3, 300, 0}, GraphClass::Interval);
    for (const auto& inst : instances) {
        const bool before = brute_force_solve(inst).sat;
        Instance relaxed = inst;
        relaxed.bounds[0].left.lo = ExtCoord::neg_inf();
        relaxed.bounds[inst.n() - 1].right.hi = ExtCoord::pos_inf();
        if (before) CHECK(brute_force_solve(relaxed).sat);
    }
}

TEST_CASE("instance stream is deterministic and has the documented sizes") {
    SmallInstanceCounts counts{0, 1, 500, 0};
    const auto a = enumerate_small_instances(42, counts, GraphClass::Interval);
    const auto b = enumerate_small_instances(42, counts, GraphClass::Interval);
    REQUIRE(a.size() == 64 + 500);
    int n4 = 0, n5 = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].bounds == b[i].bounds);
        CHECK(a[i].graph.edges() == b[i].graph.edges());
        n4 += a[i].n() == 4;
        n5 += a[i].n() == 5;
    }
    CHECK(n4 == 64);
    CHECK(n5 == 500);
}

TEST_CASE("enumerating all solutions of a tiny instance") {
    // one vertex, left end in [0,0], right end in [0,1]: right end at 0, inside (0,1), or at 1
    Instance inst = Instance::unbounded(Graph(1));
    inst.bounds[0] = {iv(0, 0), iv(0, 1)};
    const auto all = brute_force_all(inst, 100);
    CHECK(all.size() == 3);
}
