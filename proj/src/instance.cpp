#include "boundrep/instance.hpp"

#include <algorithm>
#include <numeric>

namespace boundrep {

Graph::Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges) : adj_(n) {
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    for (auto& list : adj_) {
        std::sort(list.begin(), list.end());
        if (std::adjacent_find(list.begin(), list.end()) != list.end())
            throw std::invalid_argument("duplicate edge");
    }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    const Vertex target = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::binary_search(a.begin(), a.end(), target);
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
    std::vector<int> local(adj_.size(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<int>(i);
    std::vector<std::pair<Vertex, Vertex>> sub;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (Vertex w : adj_[vertices[i]])
            if (local[w] > static_cast<int>(i)) sub.emplace_back(static_cast<int>(i), local[w]);
    return Graph(static_cast<int>(vertices.size()), sub);
}

std::vector<std::vector<Vertex>> Graph::components() const {
    std::vector<std::vector<Vertex>> result;
    std::vector<char> seen(adj_.size(), 0);
    for (Vertex s = 0; s < n(); ++s) {
        if (seen[s]) continue;
        std::vector<Vertex> comp{s};
        seen[s] = 1;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (Vertex w : adj_[comp[i]])
                if (!seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        result.push_back(std::move(comp));
    }
    return result;
}

std::string to_string(GraphClass c) {
    return c == GraphClass::Interval ? "int" : "proper-int";
}

GraphClass parse_graph_class(std::string_view text) {
    if (text == "int") return GraphClass::Interval;
    if (text == "proper-int") return GraphClass::ProperInterval;
    throw std::invalid_argument("unknown graph class \"" + std::string(text) + "\"");
}

Instance Instance::unbounded(Graph g, GraphClass cls) {
    Instance inst;
    inst.bounds.assign(g.n(), BoundPair{});
    inst.graph = std::move(g);
    inst.cls = cls;
    return inst;
}

std::string to_string(UnsatReason r) {
    switch (r) {
    case UnsatReason::EmptyBound: return "EmptyBound";
    case UnsatReason::NotChordal: return "NotChordal";
    case UnsatReason::NoConsecutiveOrder: return "NoConsecutiveOrder";
    case UnsatReason::EmptyCandidateSet: return "EmptyCandidateSet";
    case UnsatReason::Infeasible: return "Infeasible";
    case UnsatReason::PlacementFailed: return "PlacementFailed";
    case UnsatReason::NotProperInterval: return "NotProperInterval";
    case UnsatReason::NoLinearExtension: return "NoLinearExtension";
    case UnsatReason::EmptyContractedBound: return "EmptyContractedBound";
    case UnsatReason::BoundExceeded: return "BoundExceeded";
    }
    return "Unknown";
}

Outcome<Instance> normalize_bounds(const Instance& inst) {
    Instance out = inst;
    for (Vertex v = 0; v < out.n(); ++v) {
        auto& [left, right] = out.bounds[v];
        right.lo = std::max(right.lo, left.lo);
        left.hi = std::min(left.hi, right.hi);
        auto unusable = [](const Bound& b) { return b.empty() || b.lo.is_pos_inf() || b.hi.is_neg_inf(); };
        if (unusable(left) || unusable(right))
            return Unsat{UnsatReason::EmptyBound, "vertex " + std::to_string(v) + " has no l(I) <= r(I) within its bounds"};
    }
    return out;
}

std::string to_string(Violation::Kind k) {
    switch (k) {
    case Violation::Kind::LeftBound: return "left-bound";
    case Violation::Kind::RightBound: return "right-bound";
    case Violation::Kind::Degenerate: return "reversed-interval";
    case Violation::Kind::MissingEdge: return "missing-edge";
    case Violation::Kind::ExtraEdge: return "extra-edge";
    case Violation::Kind::ProperContainment: return "proper-containment";
    case Violation::Kind::SizeMismatch: return "size-mismatch";
    }
    return "unknown";
}

namespace {

constexpr std::size_t kMaxExtraEdgeReports = 1000;
constexpr int kQuadraticContainmentLimit = 4096;

void check_containment(const Representation& rep, std::vector<Violation>& out) {
    const auto& iv = rep.intervals;
    const int n = static_cast<int>(iv.size());
    auto report = [&](int inner, int outer) {
        out.push_back({Violation::Kind::ProperContainment, inner, outer,
                       "I_" + std::to_string(inner) + " is a proper subset of I_" + std::to_string(outer)});
    };
    if (n <= kQuadraticContainmentLimit) {
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v && iv[u].subset_of(iv[v]) && iv[u] != iv[v]) report(u, v);
        return;
    }
    // Sorted by (lo asc, hi desc): some later distinct interval is contained in an
    // earlier one iff its hi does not exceed the running maximum.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (iv[a].lo != iv[b].lo) return iv[a].lo < iv[b].lo;
        if (iv[a].hi != iv[b].hi) return iv[a].hi > iv[b].hi;
        return a < b;
    });
    int best = -1;
    for (int k = 0; k < n; ++k) {
        const int v = order[k];
        if (best >= 0 && iv[v].hi <= iv[best].hi && iv[v] != iv[best]) report(v, best);
        if (best < 0 || iv[v].hi > iv[best].hi) best = v;
    }
}

} // namespace

CheckReport check_representation(const Instance& inst, const Representation& rep) {
    CheckReport report;
    auto& out = report.violations;
    const int n = inst.n();
    if (static_cast<int>(rep.intervals.size()) != n || static_cast<int>(inst.bounds.size()) != n) {
        out.push_back({Violation::Kind::SizeMismatch, -1, -1,
                       "representation has " + std::to_string(rep.intervals.size()) + " intervals for " +
                           std::to_string(n) + " vertices"});
        return report;
    }
    const auto& iv = rep.intervals;
    for (Vertex v = 0; v < n; ++v) {
        const auto name = std::to_string(v);
        if (iv[v].hi < iv[v].lo)
            out.push_back({Violation::Kind::Degenerate, v, -1, "I_" + name + " has l > r"});
        if (!inst.bounds[v].left.contains(iv[v].lo))
            out.push_back({Violation::Kind::LeftBound, v, -1, "l(I_" + name + ") outside its left bound"});
        if (!inst.bounds[v].right.contains(iv[v].hi))
            out.push_back({Violation::Kind::RightBound, v, -1, "r(I_" + name + ") outside its right bound"});
    }
    for (auto [u, v] : inst.graph.edges())
        if (!iv[u].intersects(iv[v]))
            out.push_back({Violation::Kind::MissingEdge, u, v,
                           "edge " + std::to_string(u) + "-" + std::to_string(v) + " but intervals are disjoint"});

    // Intersecting pairs by a sweep over left endpoints; each scanned pair is
    // either an edge or a reported violation, so the cost stays output-sensitive.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return iv[a].lo != iv[b].lo ? iv[a].lo < iv[b].lo : a < b;
    });
    std::size_t extra = 0;
    for (int i = 0; i < n && extra < kMaxExtraEdgeReports; ++i) {
        const int u = order[i];
        for (int j = i + 1; j < n && iv[order[j]].lo <= iv[u].hi; ++j) {
            const int v = order[j];
            if (inst.graph.adjacent(u, v)) continue;
            out.push_back({Violation::Kind::ExtraEdge, std::min(u, v), std::max(u, v),
                           "non-edge " + std::to_string(std::min(u, v)) + "-" + std::to_string(std::max(u, v)) +
                               " but intervals intersect"});
            if (++extra >= kMaxExtraEdgeReports) break;
        }
    }
    if (inst.cls == GraphClass::ProperInterval) check_containment(rep, out);
    return report;
}

Instance reduce_repext(const Graph& g, const std::map<Vertex, Interval>& predrawn, GraphClass cls) {
    for (const auto& [v, interval] : predrawn) {
        if (v < 0 || v >= g.n()) throw InvalidInput("predrawn vertex out of range");
        if (interval.hi < interval.lo) throw InvalidInput("predrawn interval of vertex " + std::to_string(v) + " is reversed");
    }
    for (auto it = predrawn.begin(); it != predrawn.end(); ++it)
        for (auto jt = std::next(it); jt != predrawn.end(); ++jt)
            if (it->second.intersects(jt->second) != g.adjacent(it->first, jt->first))
                throw InvalidInput("predrawn intervals of " + std::to_string(it->first) + " and " +
                                   std::to_string(jt->first) + " contradict the induced subgraph");
    Instance inst = Instance::unbounded(g, cls);
    for (const auto& [v, interval] : predrawn)
        inst.bounds[v] = {Bound::point(interval.lo), Bound::point(interval.hi)};
    return inst;
}

Instance reduce_inclusion(const Graph& g, std::span<const std::optional<Interval>> inner,
                          std::span<const std::optional<Interval>> outer, GraphClass cls) {
    if (static_cast<int>(inner.size()) != g.n() || static_cast<int>(outer.size()) != g.n())
        throw InvalidInput("inclusion constraints must be given for every vertex");
    Instance inst = Instance::unbounded(g, cls);
    for (Vertex v = 0; v < g.n(); ++v) {
        const auto& a = inner[v];
        const auto& b = outer[v];
        if (a && b && !a->subset_of(*b))
            throw InvalidInput("inner interval of vertex " + std::to_string(v) + " is not inside the outer one");
        auto& bp = inst.bounds[v];
        if (a && b) {
            bp.left = {b->lo, a->lo};
            bp.right = {a->hi, b->hi};
        } else if (b) {
            bp.left = *b;
            bp.right = *b;
        } else if (a) {
            bp.left = {ExtCoord::neg_inf(), a->lo};
            bp.right = {a->hi, ExtCoord::pos_inf()};
        }
    }
    return inst;
}

} // namespace boundrep
