#include "boundrep/proper_solver.hpp"

#include "boundrep/chordal.hpp"
#include "boundrep/handles.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>

namespace boundrep {

Outcome<ComponentOrder> component_order(const Instance& inst) {
    ComponentOrder out;
    out.components = inst.graph.components();
    for (const auto& comp : out.components) {
        ExtCoord lh = ExtCoord::pos_inf();
        ExtCoord uh = ExtCoord::neg_inf();
        for (Vertex v : comp) {
            lh = std::min(lh, inst.bounds[v].left.hi);
            uh = std::max(uh, inst.bounds[v].right.lo);
        }
        out.lower_handle.push_back(lh);
        out.upper_handle.push_back(uh);
    }
    auto order = order_by_handles<ExtCoord>(out.lower_handle, out.upper_handle);
    if (!order) return Unsat{UnsatReason::NoLinearExtension, "components cannot be ordered left to right"};
    out.order = std::move(*order);
    return out;
}

bool is_umbrella_order(const Graph& g, std::span<const Vertex> order) {
    std::vector<int> pos(g.n(), -1);
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
    for (Vertex v : order) {
        int lo = pos[v], hi = pos[v];
        for (Vertex w : g.neighbors(v)) {
            if (pos[w] < 0) return false;
            lo = std::min(lo, pos[w]);
            hi = std::max(hi, pos[w]);
        }
        if (hi - lo != static_cast<int>(g.neighbors(v).size())) return false;
    }
    return true;
}

namespace {

bool same_closed_neighborhood(const Graph& g, Vertex u, Vertex v) {
    const auto& a = g.neighbors(u);
    const auto& b = g.neighbors(v);
    if (a.size() != b.size() || !g.adjacent(u, v)) return false;
    std::size_t i = 0, j = 0;
    while (true) {
        if (i < a.size() && a[i] == v) ++i;
        if (j < b.size() && b[j] == u) ++j;
        if (i == a.size() || j == b.size()) return i == a.size() && j == b.size();
        if (a[i++] != b[j++]) return false;
    }
}

} // namespace

Outcome<CanonicalOrder> canonical_order(const Graph& g, std::span<const Vertex> component) {
    CanonicalOrder out;
    const Graph sub = g.induced(component);
    const auto s1 = lex_bfs(sub);
    const auto s2 = lex_bfs_plus(sub, s1);
    const auto s3 = lex_bfs_plus(sub, s2);
    for (Vertex v : s3) out.order.push_back(component[v]);
    if (!is_umbrella_order(g, out.order))
        return Unsat{UnsatReason::NotProperInterval,
                     "component of vertex " + std::to_string(component.front()) + " is not a proper interval graph"};
    for (std::size_t i = 0; i < out.order.size(); ++i) {
        if (i == 0 || !same_closed_neighborhood(g, out.order[i - 1], out.order[i])) out.groups.emplace_back();
        out.groups.back().push_back(out.order[i]);
    }
    return out;
}

namespace {

bool left_of(const Bound& a, const Bound& b) { return a.hi <= b.lo; }

bool forced_before(const Bound& la, const Bound& ra, const Bound& lb, const Bound& rb) {
    return left_of(la, lb) || left_of(ra, rb);
}

} // namespace

GroupPrecedence group_precedence(const Instance& inst, std::span<const Vertex> group) {
    const int k = static_cast<int>(group.size());
    GroupPrecedence out;
    out.arcs.resize(k);
    for (int i = 0; i < k; ++i) {
        const auto& bi = inst.bounds[group[i]];
        for (int j = 0; j < k; ++j) {
            const auto& bj = inst.bounds[group[j]];
            if (i != j && forced_before(bi.left, bi.right, bj.left, bj.right)) out.arcs[i].push_back(j);
        }
    }

    // Tarjan, iterative
    std::vector<int> index(k, -1), low(k, 0), comp(k, -1), stack;
    std::vector<char> on_stack(k, 0);
    std::vector<std::pair<int, std::size_t>> call;
    int counter = 0, comps = 0;
    for (int s = 0; s < k; ++s) {
        if (index[s] >= 0) continue;
        call.emplace_back(s, 0);
        index[s] = low[s] = counter++;
        stack.push_back(s);
        on_stack[s] = 1;
        while (!call.empty()) {
            auto& [v, next] = call.back();
            if (next < out.arcs[v].size()) {
                const int w = out.arcs[v][next++];
                if (index[w] < 0) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    call.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            const int done = v;
            call.pop_back();
            if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
            if (low[done] == index[done]) {
                int w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    comp[w] = comps;
                } while (w != done);
                ++comps;
            }
        }
    }

    std::vector<std::vector<Vertex>> members(comps);
    for (int i = 0; i < k; ++i) members[comp[i]].push_back(group[i]);
    for (auto& m : members) std::sort(m.begin(), m.end());
    std::vector<std::vector<int>> dag(comps);
    std::vector<int> indegree(comps, 0);
    for (int i = 0; i < k; ++i)
        for (int j : out.arcs[i])
            if (comp[i] != comp[j]) dag[comp[i]].push_back(comp[j]);
    for (auto& d : dag) {
        std::sort(d.begin(), d.end());
        d.erase(std::unique(d.begin(), d.end()), d.end());
        for (int c : d) ++indegree[c];
    }
    std::priority_queue<std::pair<Vertex, int>, std::vector<std::pair<Vertex, int>>, std::greater<>> ready;
    for (int c = 0; c < comps; ++c)
        if (indegree[c] == 0) ready.emplace(members[c].front(), c);
    while (!ready.empty()) {
        const int c = ready.top().second;
        ready.pop();
        out.sccs.push_back(members[c]);
        for (int d : dag[c])
            if (--indegree[d] == 0) ready.emplace(members[d].front(), d);
    }
    return out;
}

Outcome<ReducedComponent> contract_and_order(const Instance& inst, const CanonicalOrder& canonical) {
    ReducedComponent out;
    std::unordered_map<Vertex, int> item_of;
    for (const auto& group : canonical.groups) {
        const int first = static_cast<int>(out.members.size());
        for (auto& scc : group_precedence(inst, group).sccs) {
            Bound left, right;
            for (Vertex v : scc) {
                left = intersect(left, inst.bounds[v].left);
                right = intersect(right, inst.bounds[v].right);
                item_of[v] = static_cast<int>(out.members.size());
            }
            if (left.empty() || right.empty()) {
                std::string who;
                for (Vertex v : scc) who += (who.empty() ? "" : ",") + std::to_string(v);
                return Unsat{UnsatReason::EmptyContractedBound,
                             "vertices {" + who + "} need equal intervals but share no admissible position"};
            }
            out.members.push_back(std::move(scc));
            out.left.push_back(left);
            out.right.push_back(right);
        }
        out.groups.emplace_back(first, static_cast<int>(out.members.size()));
    }
    const int k = static_cast<int>(out.members.size());
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<int> seen(k, -1);
    for (int i = 0; i < k; ++i)
        for (Vertex w : inst.graph.neighbors(out.members[i].front())) {
            const int j = item_of.at(w);
            if (j > i && seen[j] != i) {
                seen[j] = i;
                edges.emplace_back(i, j);
            }
        }
    out.graph = Graph(k, edges);
    return out;
}

std::vector<EndpointSymbol> common_endpoint_order(const Graph& g, std::span<const int> order) {
    const int k = static_cast<int>(order.size());
    std::vector<int> pos(g.n(), -1);
    for (int i = 0; i < k; ++i) pos[order[i]] = i;
    std::vector<std::vector<int>> before(k + 1);
    for (int i = 0; i < k; ++i) {
        int reach = i;
        for (Vertex w : g.neighbors(order[i])) reach = std::max(reach, pos[w]);
        before[reach + 1].push_back(order[i]);
    }
    std::vector<EndpointSymbol> seq;
    seq.reserve(2 * k);
    for (int j = 0; j <= k; ++j) {
        for (int x : before[j]) seq.push_back({x, true});
        if (j < k) seq.push_back({order[j], false});
    }
    return seq;
}

namespace {

std::string describe(const ReducedComponent& reduced, int item, bool right) {
    std::string s = right ? "right endpoint of {" : "left endpoint of {";
    for (std::size_t i = 0; i < reduced.members[item].size(); ++i)
        s += (i ? "," : "") + std::to_string(reduced.members[item][i]);
    return s + "}";
}

Unsat exceeded(const ReducedComponent& reduced, int item, bool right) {
    return {UnsatReason::BoundExceeded, describe(reduced, item, right) + " cannot be placed inside its bound"};
}

} // namespace

// Inside a group every item order that respects the forced precedences
// places the left endpoints, and separately the right endpoints, equally
// well: positions strictly between two endpoints of the line are never
// scarce. The order only matters where a right endpoint has to share the
// position of the left endpoint just before it. Everything that must sit on
// that left position is then tied into the last class of its group, and
// everything that must sit on the shared right position into the first
// class of its group.
Outcome<ItemOrder> item_order(const ReducedComponent& reduced, const Line& line, Position start, bool reversed) {
    const int k = static_cast<int>(reduced.members.size());
    const int m = static_cast<int>(reduced.groups.size());
    std::vector<AnchoredBound> al(k), ar(k);
    std::vector<int> group_of(k);
    for (int i = 0; i < k; ++i) {
        al[i] = line.anchor(reduced.left[i]);
        ar[i] = line.anchor(reduced.right[i]);
    }
    std::vector<int> seq_group(m); // position -> group
    std::vector<int> where(m);     // group -> position
    for (int q = 0; q < m; ++q) {
        seq_group[q] = reversed ? m - 1 - q : q;
        where[seq_group[q]] = q;
    }
    for (int g = 0; g < m; ++g)
        for (int i = reduced.groups[g].first; i < reduced.groups[g].second; ++i) group_of[i] = g;

    auto arc = [&](int a, int b) {
        return forced_before(reduced.left[a], reduced.right[a], reduced.left[b], reduced.right[b]);
    };
    // closure inside the group along arcs (forward = successors)
    auto closure = [&](std::vector<int> seeds, bool forward) {
        const auto [lo, hi] = reduced.groups[group_of[seeds.front()]];
        std::vector<char> in(hi - lo, 0);
        for (int x : seeds) in[x - lo] = 1;
        for (std::size_t i = 0; i < seeds.size(); ++i)
            for (int y = lo; y < hi; ++y)
                if (!in[y - lo] && (forward ? arc(seeds[i], y) : arc(y, seeds[i]))) {
                    in[y - lo] = 1;
                    seeds.push_back(y);
                }
        std::sort(seeds.begin(), seeds.end());
        return seeds;
    };

    // right-endpoint blocks go before the left block of the first group not adjacent to them
    std::vector<std::vector<int>> before(m + 1);
    for (int q = 0; q < m; ++q) {
        int reach = q;
        for (Vertex w : reduced.graph.neighbors(reduced.groups[seq_group[q]].first))
            reach = std::max(reach, where[group_of[w]]);
        before[reach + 1].push_back(seq_group[q]);
    }

    std::vector<std::vector<int>> head(m), tail(m);
    Position p = start;
    bool after_left = false;
    int pending_group = -1;
    std::vector<int> pending; // items whose left endpoints would sit on p

    auto right_block = [&](int g) -> std::optional<Unsat> {
        const auto [lo, hi] = reduced.groups[g];
        std::vector<int> tight;
        Position top = Position::bottom();
        for (int x = lo; x < hi; ++x) {
            if (!ar[x].admits_upper(p.fresh_after())) {
                if (!after_left || pending.empty() || !ar[x].admits_upper(p)) return exceeded(reduced, x, true);
                tight.push_back(x);
            }
            top = std::max(top, ar[x].lower());
        }
        if (!tight.empty()) {
            tail[pending_group] = closure(pending, true);
            head[g] = closure(tight, false);
            for (int x : head[g])
                if (!ar[x].contains(p)) return exceeded(reduced, x, true);
        }
        p = top > p ? Position{top.anchor, 1} : p.fresh_after();
        after_left = false;
        pending.clear();
        return std::nullopt;
    };

    for (int q = 0; q <= m; ++q) {
        for (int g : before[q])
            if (auto u = right_block(g)) return *u;
        if (q == m) break;
        const int g = seq_group[q];
        const auto [lo, hi] = reduced.groups[g];
        Position top = Position::bottom();
        for (int x = lo; x < hi; ++x) {
            if (!al[x].admits_upper(p.fresh_after())) return exceeded(reduced, x, false);
            top = std::max(top, al[x].lower());
        }
        pending.clear();
        if (top > p) {
            for (int x = lo; x < hi; ++x)
                if (al[x].lower() == top) pending.push_back(x);
            pending_group = g;
            p = top;
        } else {
            p = p.fresh_after();
        }
        after_left = true;
    }

    ItemOrder order;
    order.reserve(k);
    for (int q = 0; q < m; ++q) {
        const int g = seq_group[q];
        const auto [lo, hi] = reduced.groups[g];
        std::vector<char> placed(hi - lo, 0);
        for (int x : head[g]) placed[x - lo] = 1;
        bool overlap = false;
        for (int x : tail[g]) overlap |= placed[x - lo] != 0;
        if (overlap) {
            // first class is also the last one
            order.emplace_back();
            for (int x = lo; x < hi; ++x) order.back().push_back(x);
            continue;
        }
        for (int x : tail[g]) placed[x - lo] = 1;
        if (!head[g].empty()) order.push_back(head[g]);
        for (int x = lo; x < hi; ++x)
            if (!placed[x - lo]) order.push_back({x});
        if (!tail[g].empty()) order.push_back(tail[g]);
    }
    return order;
}

Outcome<LeftmostRep> leftmost_representation(const ReducedComponent& reduced, const Line& line,
                                             const ItemOrder& order, Position start) {
    const int k = static_cast<int>(reduced.members.size());
    LeftmostRep out;
    out.left.resize(k);
    out.right.resize(k);

    std::vector<int> reps, class_of(k, -1);
    for (std::size_t c = 0; c < order.size(); ++c) {
        reps.push_back(order[c].front());
        for (int x : order[c]) class_of[x] = static_cast<int>(c);
    }
    Position prev = start;
    bool prev_left = false;
    for (const EndpointSymbol& e : common_endpoint_order(reduced.graph, reps)) {
        const auto& cls = order[class_of[e.item]];
        Bound merged;
        for (int x : cls) merged = intersect(merged, e.right ? reduced.right[x] : reduced.left[x]);
        const AnchoredBound b = line.anchor(merged);
        const Position from = e.right && prev_left ? prev : prev.fresh_after();
        const Position at = std::max(from, b.lower());
        if (b.empty() || !b.admits_upper(at)) return exceeded(reduced, e.item, e.right);
        for (int x : cls) (e.right ? out.right : out.left)[x] = at;
        prev = at;
        prev_left = !e.right;
    }
    out.rightmost = prev;
    return out;
}

SolveResult solve_bounded_proper(const Instance& inst, ProperTrace* trace) {
    return solve_bounded_proper(inst, Line::of_instance(inst), trace);
}

SolveResult solve_bounded_proper(const Instance& raw, const Line& line, ProperTrace* trace) {
    auto normalized = normalize_bounds(raw);
    if (!normalized) return SolveResult::no(normalized.unsat());
    const Instance& inst = normalized.value();
    const int n = inst.n();
    if (n == 0) return SolveResult::yes({});

    auto components = component_order(inst);
    if (!components) return SolveResult::no(components.unsat());

    std::vector<Position> ends(2 * n);
    Position start = Position::bottom();
    for (int c : components.value().order) {
        const auto& comp = components.value().components[c];
        auto canonical = canonical_order(inst.graph, comp);
        if (!canonical) return SolveResult::no(canonical.unsat());
        auto reduced = contract_and_order(inst, canonical.value());
        if (!reduced) return SolveResult::no(reduced.unsat());
        const ReducedComponent& red = reduced.value();

        std::optional<Unsat> failure;
        std::optional<LeftmostRep> best;
        ItemOrder best_order;
        bool best_reversed = false;
        for (bool reversed : {false, true}) {
            if (reversed && red.groups.size() < 2) break;
            auto order = item_order(red, line, start, reversed);
            if (!order) {
                if (!failure) failure = order.unsat();
                continue;
            }
            auto rep = leftmost_representation(red, line, order.value(), start);
            if (!rep) {
                if (!failure) failure = rep.unsat();
                continue;
            }
            if (!best || rep.value().rightmost < best->rightmost) {
                best = std::move(rep.value());
                best_order = std::move(order.value());
                best_reversed = reversed;
            }
        }
        if (!best) return SolveResult::no(*failure);

        for (std::size_t i = 0; i < red.members.size(); ++i)
            for (Vertex v : red.members[i]) {
                ends[2 * v] = best->left[i];
                ends[2 * v + 1] = best->right[i];
            }
        start = best->rightmost;
        if (trace) {
            trace->components.push_back(comp);
            trace->canonical.push_back(std::move(canonical.value()));
            trace->reduced.push_back(red);
            trace->item_orders.push_back(std::move(best_order));
            trace->reversed.push_back(best_reversed);
        }
    }

    const auto xs = line.materialize(ends);
    Representation rep;
    rep.intervals.reserve(n);
    for (Vertex v = 0; v < n; ++v) rep.intervals.push_back({xs[2 * v], xs[2 * v + 1]});
    return SolveResult::yes(std::move(rep));
}

} // namespace boundrep
