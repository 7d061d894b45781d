#include "boundrep/generators.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

namespace boundrep {

Graph graph_of_intervals(std::span<const Interval> intervals) {
    const int n = static_cast<int>(intervals.size());
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return intervals[a].lo < intervals[b].lo; });
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n && intervals[order[j]].lo <= intervals[order[i]].hi; ++j)
            edges.emplace_back(std::min(order[i], order[j]), std::max(order[i], order[j]));
    return Graph(n, edges);
}

GenKind parse_gen_kind(std::string_view text) {
    if (text == "random-interval") return GenKind::RandomInterval;
    if (text == "random-proper") return GenKind::RandomProper;
    if (text == "repext") return GenKind::Repext;
    if (text == "adversarial" || text == "adversarial-bounds") return GenKind::Adversarial;
    throw std::invalid_argument("unknown generator \"" + std::string(text) + "\"");
}

std::string to_string(GenKind k) {
    switch (k) {
    case GenKind::RandomInterval: return "random-interval";
    case GenKind::RandomProper: return "random-proper";
    case GenKind::Repext: return "repext";
    case GenKind::Adversarial: return "adversarial";
    }
    return "unknown";
}

namespace {

// std distributions differ between standard libraries; plain modulo keeps
// the output identical everywhere
std::int64_t below(std::mt19937_64& rng, std::int64_t k) { return static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(k)); }

std::vector<Interval> random_intervals(std::mt19937_64& rng, int n, bool proper) {
    // about four neighbours per vertex on average
    const std::int64_t span = 4 * static_cast<std::int64_t>(std::max(n, 1));
    const std::int64_t fixed = 1 + below(rng, 8);
    std::vector<Interval> out(n);
    for (auto& iv : out) {
        const std::int64_t l = below(rng, span);
        const std::int64_t len = proper ? fixed : 1 + below(rng, 8);
        iv = {Rational(l), Rational(l + len)};
    }
    return out;
}

// a bound containing x, sometimes a point or unbounded on one or both sides
Bound around(std::mt19937_64& rng, const Rational& x) {
    switch (below(rng, 10)) {
    case 0: return Bound::unbounded();
    case 1: return Bound::point(x);
    case 2: return {ExtCoord::neg_inf(), ExtCoord(x + Rational(below(rng, 3)))};
    case 3: return {ExtCoord(x - Rational(below(rng, 3))), ExtCoord::pos_inf()};
    default: return {ExtCoord(x - Rational(below(rng, 3))), ExtCoord(x + Rational(below(rng, 3)))};
    }
}

Bound shifted(std::mt19937_64& rng, Bound b) {
    const Rational d(below(rng, 2) == 0 ? -(1 + below(rng, 2)) : 1 + below(rng, 2));
    if (b.lo.finite()) b.lo = ExtCoord(b.lo.value() + d);
    if (b.hi.finite()) b.hi = ExtCoord(b.hi.value() + d);
    return b;
}

void relabel(std::mt19937_64& rng, std::vector<Interval>& ivs) {
    for (std::size_t i = ivs.size(); i > 1; --i) std::swap(ivs[i - 1], ivs[below(rng, static_cast<std::int64_t>(i))]);
}

} // namespace

Generated generate_with_witness(const GenOptions& opt) {
    if (opt.n < 0) throw std::invalid_argument("n must be non-negative");
    std::mt19937_64 rng(opt.seed);
    const bool proper = opt.kind == GenKind::RandomProper || opt.cls == GraphClass::ProperInterval;
    Generated out;
    std::vector<Interval> ivs;

    if (opt.kind == GenKind::Adversarial) {
        // a small grid with many shared endpoints, so bounds touch and pin often
        const std::int64_t span = std::max<std::int64_t>(2, opt.n / 2);
        const std::int64_t len = 1 + below(rng, 3);
        for (int v = 0; v < opt.n; ++v) {
            const std::int64_t l = below(rng, span);
            ivs.push_back({Rational(l), Rational(l + (proper ? len : below(rng, 4)))});
        }
    } else {
        ivs = random_intervals(rng, opt.n, proper);
    }
    relabel(rng, ivs);
    const Graph g = graph_of_intervals(ivs);
    const GraphClass cls = opt.kind == GenKind::RandomProper ? GraphClass::ProperInterval : opt.cls;

    if (opt.kind == GenKind::Repext) {
        std::map<Vertex, Interval> pre;
        for (int v = 0; v < opt.n; ++v)
            if (below(rng, 5) == 0) pre.emplace(v, ivs[v]);
        if (pre.empty() && opt.n > 0) {
            const auto v = static_cast<Vertex>(below(rng, opt.n));
            pre.emplace(v, ivs[v]);
        }
        out.instance = reduce_repext(g, pre, cls);
    } else {
        out.instance = Instance::unbounded(g, cls);
        for (int v = 0; v < opt.n; ++v) {
            BoundPair& b = out.instance.bounds[v];
            if (opt.kind == GenKind::Adversarial) {
                b.left = below(rng, 2) ? Bound::point(ivs[v].lo) : Bound(ivs[v].lo, ivs[v].lo + Rational(1));
                b.right = below(rng, 2) ? Bound::point(ivs[v].hi) : Bound(ivs[v].hi - Rational(1), ivs[v].hi);
            } else {
                b.left = around(rng, ivs[v].lo);
                b.right = around(rng, ivs[v].hi);
            }
            if (!opt.sat_only && below(rng, 10) == 0) {
                if (below(rng, 2)) b.left = shifted(rng, b.left);
                else b.right = shifted(rng, b.right);
            }
        }
    }
    out.witness = std::move(ivs);
    return out;
}

Instance generate(const GenOptions& opt) { return generate_with_witness(opt).instance; }

} // namespace boundrep
