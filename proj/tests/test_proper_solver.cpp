#include "doctest.h"

#include "boundrep/interval_solver.hpp"
#include "boundrep/oracle.hpp"
#include "boundrep/proper_solver.hpp"

#include "proper_checks.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace boundrep;
using namespace boundrep::checks;

namespace {

Graph make(int n, std::vector<std::pair<Vertex, Vertex>> e) { return Graph(n, e); }
Bound iv(std::int64_t a, std::int64_t b) { return Bound(ExtCoord(a), ExtCoord(b)); }

Instance nested_k3(GraphClass cls) {
    Instance inst = Instance::unbounded(make(3, {{0, 1}, {0, 2}, {1, 2}}), cls);
    inst.bounds[0] = {iv(0, 0), iv(3, 3)};
    inst.bounds[1] = {iv(0, 0), iv(3, 3)};
    inst.bounds[2] = {iv(1, 1), iv(2, 2)};
    return inst;
}

std::string show(const std::vector<EndpointSymbol>& seq, const std::vector<std::string>& names) {
    std::string s;
    for (const auto& e : seq) s += (s.empty() ? "" : " ") + std::string(e.right ? "r" : "l") + names[e.item];
    return s;
}

// umbrella orders by exhaustive search
bool has_umbrella_order(const Graph& g) {
    std::vector<Vertex> order(g.n());
    std::iota(order.begin(), order.end(), 0);
    do {
        if (is_umbrella_order(g, order)) return true;
    } while (std::next_permutation(order.begin(), order.end()));
    return false;
}

} // namespace

TEST_CASE("component order examples") {
    Instance inst = Instance::unbounded(Graph(2), GraphClass::ProperInterval);
    inst.bounds[0] = {iv(0, 1), iv(2, 3)};
    inst.bounds[1] = {iv(10, 11), iv(12, 13)};
    auto co = component_order(inst);
    REQUIRE(co);
    CHECK(co.value().lower_handle[0] == ExtCoord(1));
    CHECK(co.value().upper_handle[0] == ExtCoord(2));
    CHECK(co.value().lower_handle[1] == ExtCoord(11));
    CHECK(co.value().upper_handle[1] == ExtCoord(12));
    CHECK(co.value().order == std::vector<int>{0, 1});

    // swap the labels: still C(v=0 side) after
    std::swap(inst.bounds[0], inst.bounds[1]);
    CHECK(component_order(inst).value().order == std::vector<int>{1, 0});

    auto free = component_order(Instance::unbounded(Graph(2)));
    REQUIRE(free);
    CHECK(free.value().order == std::vector<int>{0, 1});

    // each must come first: u ends by 1 but must reach 5, and so must v
    inst.bounds[0] = {iv(0, 1), iv(5, 6)};
    inst.bounds[1] = {iv(0, 1), iv(5, 6)};
    auto cyc = component_order(inst);
    REQUIRE_FALSE(cyc);
    CHECK(cyc.unsat().reason == UnsatReason::NoLinearExtension);
}

TEST_CASE("canonical order examples") {
    const Graph p3 = make(3, {{0, 1}, {1, 2}});
    const std::vector<Vertex> all3{0, 1, 2};
    auto c = canonical_order(p3, all3);
    REQUIRE(c);
    const bool forward = c.value().order == std::vector<Vertex>{0, 1, 2};
    const bool backward = c.value().order == std::vector<Vertex>{2, 1, 0};
    CHECK((forward || backward));
    CHECK(c.value().groups.size() == 3);

    auto k3 = canonical_order(make(3, {{0, 1}, {0, 2}, {1, 2}}), all3);
    REQUIRE(k3);
    REQUIRE(k3.value().groups.size() == 1);
    CHECK(k3.value().groups[0].size() == 3);

    const Graph claw = make(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK_FALSE(has_umbrella_order(claw));
    const std::vector<Vertex> all4{0, 1, 2, 3};
    auto cc = canonical_order(claw, all4);
    REQUIRE_FALSE(cc);
    CHECK(cc.unsat().reason == UnsatReason::NotProperInterval);
}

TEST_CASE("canonical order agrees with exhaustive umbrella search") {
    std::mt19937_64 rng(99);
    for (int n = 1; n <= 7; ++n) {
        const int pairs = n * (n - 1) / 2;
        const int samples = n <= 5 ? (1 << pairs) : 400;
        for (int s = 0; s < samples; ++s) {
            const std::uint64_t mask = n <= 5 ? static_cast<std::uint64_t>(s) : rng();
            std::vector<std::pair<Vertex, Vertex>> e;
            int bit = 0;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v, ++bit)
                    if (mask >> bit & 1u) e.emplace_back(u, v);
            const Graph g(n, e);
            for (const auto& comp : g.components()) {
                const Graph sub = g.induced(comp);
                auto c = canonical_order(g, comp);
                CHECK(c.ok() == has_umbrella_order(sub));
                if (!c) continue;
                CHECK(is_umbrella_order(g, c.value().order));
                // groups are exactly the classes of equal closed neighbourhoods
                for (const auto& grp : c.value().groups)
                    for (Vertex v : grp) CHECK(g.adjacent(grp.front(), v) == (v != grp.front()));
                for (std::size_t a = 0; a < c.value().groups.size(); ++a)
                    for (std::size_t b = a + 1; b < c.value().groups.size(); ++b) {
                        const Vertex u = c.value().groups[a].front(), v = c.value().groups[b].front();
                        auto closed = [&](Vertex x) {
                            auto s = g.neighbors(x);
                            s.push_back(x);
                            std::sort(s.begin(), s.end());
                            return s;
                        };
                        CHECK(closed(u) != closed(v));
                    }
            }
        }
    }
}

TEST_CASE("group precedence examples") {
    Instance inst = Instance::unbounded(make(2, {{0, 1}}), GraphClass::ProperInterval);
    inst.bounds[0] = {iv(0, 1), iv(4, 6)};
    inst.bounds[1] = {iv(2, 3), iv(5, 7)};
    const std::vector<Vertex> grp{0, 1};
    auto h = group_precedence(inst, grp);
    CHECK(h.arcs[0] == std::vector<int>{1});
    CHECK(h.arcs[1].empty());
    CHECK(h.sccs == std::vector<std::vector<Vertex>>{{0}, {1}});

    // left bounds say u first, right bounds say v first
    inst.bounds[0] = {iv(0, 2), iv(6, 7)};
    inst.bounds[1] = {iv(2, 3), iv(4, 5)};
    h = group_precedence(inst, grp);
    CHECK(h.arcs[0] == std::vector<int>{1});
    CHECK(h.arcs[1] == std::vector<int>{0});
    CHECK(h.sccs == std::vector<std::vector<Vertex>>{{0, 1}});

    auto free = group_precedence(Instance::unbounded(make(3, {{0, 1}, {0, 2}, {1, 2}})), std::vector<Vertex>{2, 0, 1});
    CHECK(free.sccs == std::vector<std::vector<Vertex>>{{0}, {1}, {2}});
    for (const auto& a : free.arcs) CHECK(a.empty());
}

TEST_CASE("contraction examples") {
    Instance inst = Instance::unbounded(make(2, {{0, 1}}), GraphClass::ProperInterval);
    const CanonicalOrder one{{0, 1}, {{0, 1}}};

    // equal point right bounds give arcs both ways; left bounds are intersected
    inst.bounds[0] = {iv(0, 2), iv(5, 5)};
    inst.bounds[1] = {iv(1, 3), iv(5, 5)};
    auto merged = contract_and_order(inst, one);
    REQUIRE(merged);
    REQUIRE(merged.value().members.size() == 1);
    CHECK(merged.value().members[0] == std::vector<Vertex>{0, 1});
    CHECK(merged.value().left[0] == iv(1, 2));
    CHECK(merged.value().right[0] == iv(5, 5));

    // u -> v through the left bounds, v -> u through the right bounds, nothing in common on the left
    inst.bounds[0] = {iv(0, 1), iv(6, 8)};
    inst.bounds[1] = {iv(2, 3), iv(5, 6)};
    auto bad = contract_and_order(inst, one);
    REQUIRE_FALSE(bad);
    CHECK(bad.unsat().reason == UnsatReason::EmptyContractedBound);

    // only one direction forced: two items, u first
    inst.bounds[0] = {iv(0, 1), iv(5, 8)};
    inst.bounds[1] = {iv(2, 3), iv(5, 8)};
    auto two = contract_and_order(inst, one);
    REQUIRE(two);
    CHECK(two.value().members == std::vector<std::vector<Vertex>>{{0}, {1}});
    CHECK(two.value().groups == std::vector<std::pair<int, int>>{{0, 2}});

    const Instance path = Instance::unbounded(make(3, {{0, 1}, {1, 2}}));
    const CanonicalOrder po{{0, 1, 2}, {{0}, {1}, {2}}};
    auto same = contract_and_order(path, po);
    REQUIRE(same);
    CHECK(same.value().members.size() == 3);
    CHECK(same.value().graph.edges() == path.graph.edges());
    CHECK(same.value().left[1] == Bound::unbounded());
}

TEST_CASE("common endpoint order examples") {
    const std::vector<int> abc{0, 1, 2};
    CHECK(show(common_endpoint_order(make(3, {{0, 1}, {1, 2}}), abc), {"a", "b", "c"}) == "la lb ra lc rb rc");
    const std::vector<int> two{0, 1};
    CHECK(show(common_endpoint_order(make(2, {{0, 1}}), two), {"1", "2"}) == "l1 l2 r1 r2");
    CHECK(show(common_endpoint_order(Graph(2), two), {"u", "v"}) == "lu ru lv rv");
}

TEST_CASE("leftmost representation examples") {
    Instance one = Instance::unbounded(Graph(1), GraphClass::ProperInterval);
    one.bounds[0] = {iv(0, 2), iv(1, 3)};
    const Line line({Rational(0), Rational(1), Rational(2), Rational(3), Rational(5)});
    CanonicalOrder single{{0}, {{0}}};
    auto red = contract_and_order(one, single);
    REQUIRE(red);
    const ItemOrder order{{0}};
    auto rep = leftmost_representation(red.value(), line, order, Position::bottom());
    REQUIRE(rep);
    CHECK(rep.value().left[0] == line.at(Rational(0)));
    CHECK(rep.value().right[0] == line.at(Rational(1)));

    auto late = leftmost_representation(red.value(), line, order, line.at(Rational(5)));
    REQUIRE_FALSE(late);
    CHECK(late.unsat().reason == UnsatReason::BoundExceeded);

    const Instance k2 = Instance::unbounded(make(2, {{0, 1}}), GraphClass::ProperInterval);
    CanonicalOrder kk{{0, 1}, {{0, 1}}};
    auto rk = contract_and_order(k2, kk);
    REQUIRE(rk);
    const Line zero({Rational(0)});
    const ItemOrder o2{{0}, {1}};
    auto r2 = leftmost_representation(rk.value(), zero, o2, zero.at(Rational(0)));
    REQUIRE(r2);
    const Position origin = zero.at(Rational(0));
    CHECK(r2.value().left[0] > origin);
    CHECK(r2.value().left[0] < r2.value().left[1]);
    CHECK(r2.value().right[0] == r2.value().left[1]);
    CHECK(r2.value().right[0] < r2.value().right[1]);
    CHECK(r2.value().rightmost == r2.value().right[1]);
}

TEST_CASE("proper solver examples") {
    auto claw = solve_bounded_proper(Instance::unbounded(make(4, {{0, 1}, {0, 2}, {0, 3}}), GraphClass::ProperInterval));
    REQUIRE_FALSE(claw.sat());
    CHECK(claw.unsat->reason == UnsatReason::NotProperInterval);

    const Instance fig = nested_k3(GraphClass::ProperInterval);
    auto r = solve_bounded_proper(fig);
    CHECK_FALSE(r.sat());
    CHECK_FALSE(brute_force_solve(fig).sat);
    CHECK(solve_bounded_interval(nested_k3(GraphClass::Interval)).sat());

    const Instance p4 = Instance::unbounded(make(4, {{0, 1}, {1, 2}, {2, 3}}), GraphClass::ProperInterval);
    auto free = solve_bounded_proper(p4);
    REQUIRE(free.sat());
    CHECK(check_representation(p4, *free.representation).ok());

    Instance empty = Instance::unbounded(Graph(1), GraphClass::ProperInterval);
    empty.bounds[0] = {iv(3, 4), iv(0, 1)};
    auto e = solve_bounded_proper(empty);
    REQUIRE_FALSE(e.sat());
    CHECK(e.unsat->reason == UnsatReason::EmptyBound);

    CHECK(solve_bounded_proper(Instance::unbounded(Graph(0), GraphClass::ProperInterval)).sat());
}

TEST_CASE("proper solver agrees with the oracle on small instances") {
    SmallInstanceCounts counts{10, 100, 500, 60};
    const auto instances = enumerate_small_instances(77, counts, GraphClass::ProperInterval);
    int sat = 0, mismatches = 0;
    for (const auto& inst : instances) {
        const auto got = solve_bounded_proper(inst);
        const bool expect = brute_force_solve(inst).sat;
        if (got.sat() != expect) {
            ++mismatches;
            CHECK(got.sat() == expect);
        }
        if (got.sat()) {
            ++sat;
            CHECK(check_representation(inst, *got.representation).ok());
        }
    }
    CHECK(mismatches == 0);
    MESSAGE("sat instances: " << sat << " of " << instances.size());
    CHECK(sat > static_cast<int>(instances.size()) / 10);
}

namespace {

// proper interval graph from a random grid representation, with bounds
// drawn around that representation (shifted now and then)
Instance near_witness(std::mt19937_64& rng, int max_n) {
    const int n = 1 + static_cast<int>(rng() % max_n);
    std::vector<int> l(n);
    for (int& x : l) x = static_cast<int>(rng() % 8);
    std::sort(l.begin(), l.end());
    const int len = static_cast<int>(rng() % 4);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (l[j] <= l[i] + len) e.emplace_back(std::min(perm[i], perm[j]), std::max(perm[i], perm[j]));
    Instance inst = Instance::unbounded(Graph(n, e), GraphClass::ProperInterval);
    auto around = [&](int x) -> Bound {
        switch (rng() % 6) {
        case 0: return Bound::unbounded();
        case 1: return Bound::point(Rational(x));
        default: break;
        }
        int a = x - static_cast<int>(rng() % 3), b = x + static_cast<int>(rng() % 3);
        if (rng() % 2) {
            const int s = static_cast<int>(rng() % 5) - 2;
            a += s, b += s;
        }
        if (rng() % 7 == 0) return {ExtCoord::neg_inf(), ExtCoord(b)};
        if (rng() % 7 == 0) return {ExtCoord(a), ExtCoord::pos_inf()};
        return {ExtCoord(a), ExtCoord(b)};
    };
    for (int i = 0; i < n; ++i) inst.bounds[perm[i]] = {around(l[i]), around(l[i] + len)};
    return inst;
}

} // namespace

TEST_CASE("proper solver agrees with the oracle near feasible representations") {
    std::mt19937_64 rng(31);
    int sat = 0, mismatches = 0;
    const int rounds = 4000;
    for (int i = 0; i < rounds; ++i) {
        const Instance inst = near_witness(rng, 8);
        const auto got = solve_bounded_proper(inst);
        const bool expect = brute_force_solve(inst, 8).sat;
        if (got.sat() != expect) {
            ++mismatches;
            CHECK(got.sat() == expect);
        }
        if (got.sat()) {
            ++sat;
            CHECK(check_representation(inst, *got.representation).ok());
        }
    }
    CHECK(mismatches == 0);
    CHECK(sat > rounds / 4);
    CHECK(sat < rounds * 9 / 10);
}

TEST_CASE("leftmost representation is the bottom of the meet semilattice") {
    std::mt19937_64 rng(8);
    int checked = 0, pairs = 0;
    for (int round = 0; round < 1500 && checked < 150; ++round) {
        const Instance inst = near_witness(rng, 5);
        ProperTrace trace;
        if (!solve_bounded_proper(inst, &trace).sat() || trace.reduced.size() != 1) continue;
        const ReducedComponent& red = trace.reduced[0];
        const ItemOrder& order = trace.item_orders[0];
        const Instance sub = reduced_instance(red);
        const Line line = Line::of_instance(sub);
        auto rep = leftmost_representation(red, line, order, Position::bottom());
        REQUIRE(rep);

        std::vector<OracleSolution> same;
        const std::size_t cap = 20000;
        auto all = brute_force_all(sub, cap);
        if (all.size() == cap) continue; // too loose to enumerate completely
        for (auto& s : all)
            if (follows(s, order)) same.push_back(std::move(s));
        INFO("k=" << sub.n() << " all=" << all.size() << " classes=" << order.size());
        REQUIRE_FALSE(same.empty());
        ++checked;
        const int k = sub.n();
        for (const auto& s : same)
            for (int x = 0; x < k; ++x) {
                CHECK(Line::cell_of(rep.value().left[x]) <= s.left[x].cell);
                CHECK(Line::cell_of(rep.value().right[x]) <= s.right[x].cell);
            }
        for (std::size_t a = 0; a < same.size() && a < 12; ++a)
            for (std::size_t b = a + 1; b < same.size() && b < 12; ++b) {
                Representation meet;
                for (int x = 0; x < k; ++x)
                    meet.intervals.push_back({slot_value(line, std::min(same[a].left[x], same[b].left[x]), k),
                                              slot_value(line, std::min(same[a].right[x], same[b].right[x]), k)});
                CHECK(check_representation(sub, meet).ok());
                ++pairs;
            }
    }
    CHECK(checked >= 100);
    CHECK(pairs > 100);
}

TEST_CASE("forced precedences hold in every oracle witness") {
    std::mt19937_64 rng(12);
    int arcs = 0;
    for (int round = 0; round < 2000; ++round) {
        const Instance raw = near_witness(rng, 6);
        const auto oracle = brute_force_solve(raw);
        if (!oracle.sat) continue;
        const Instance inst = normalize_bounds(raw).value();
        for (const auto& comp : inst.graph.components()) {
            auto canonical = canonical_order(inst.graph, comp);
            REQUIRE(canonical);
            for (const auto& group : canonical.value().groups) {
                const auto h = group_precedence(inst, group);
                for (std::size_t i = 0; i < group.size(); ++i)
                    for (int j : h.arcs[i]) {
                        const Interval& u = oracle.witness->intervals[group[i]];
                        const Interval& v = oracle.witness->intervals[group[j]];
                        CHECK(u.lo <= v.lo);
                        CHECK(u.hi <= v.hi);
                        ++arcs;
                    }
            }
        }
    }
    CHECK(arcs > 50);
}

TEST_CASE("component handles match the pairwise definition") {
    const auto instances = enumerate_small_instances(5, {0, 20, 300, 100}, GraphClass::ProperInterval);
    int bad = 0;
    for (const auto& raw : instances) bad += handle_violations(raw);
    CHECK(bad == 0);
}
