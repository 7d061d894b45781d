#include "boundrep/interval_solver.hpp"

#include "boundrep/clique_order.hpp"

#include <algorithm>

namespace boundrep {

CandidateSets::CandidateSets(const Instance& inst, const Line& line, const CliqueSet& cliques) : line_(&line) {
    const int n = inst.n();
    cells_ = line.cell_count();

    // blocked cells of v: anchor r(L_v) up to anchor l(R_v)
    std::vector<std::pair<int, int>> blocked(n, {0, -1});
    std::vector<int> diff(cells_ + 1, 0);
    for (Vertex v = 0; v < n; ++v) {
        const auto& [left, right] = inst.bounds[v];
        if (!left.hi.finite() || !right.lo.finite() || right.lo < left.hi) continue;
        const int a = 2 * line.index_of(left.hi.value()) + 1;
        const int b = 2 * line.index_of(right.lo.value()) + 1;
        blocked[v] = {a, b};
        ++diff[a];
        --diff[b + 1];
    }

    int leaves = 1;
    while (leaves < cells_) leaves *= 2;
    tree_min_.assign(2 * leaves, 0);
    tree_max_.assign(2 * leaves, 0);
    int running = 0;
    for (int c = 0; c < leaves; ++c) {
        if (c < cells_) running += diff[c];
        // padding cells are never queried
        tree_min_[leaves + c] = tree_max_[leaves + c] = c < cells_ ? running : 0;
    }
    for (int i = leaves - 1; i >= 1; --i) {
        tree_min_[i] = std::min(tree_min_[2 * i], tree_min_[2 * i + 1]);
        tree_max_[i] = std::max(tree_max_[2 * i], tree_max_[2 * i + 1]);
    }
    cells_ = leaves;

    const int last = line.cell_count() - 1;
    std::vector<std::pair<int, int>> events;
    for (const auto& clique : cliques.cliques) {
        int lo_anchor = -1;
        int hi_anchor = line.size();
        for (Vertex u : clique) {
            lo_anchor = std::max(lo_anchor, line.lower_anchor(inst.bounds[u].left.lo));
            hi_anchor = std::min(hi_anchor, line.upper_anchor(inst.bounds[u].right.hi));
        }
        const int lo = lo_anchor < 0 ? 0 : 2 * lo_anchor + 1;
        const int hi = hi_anchor == line.size() ? last : 2 * hi_anchor + 1;
        base_.emplace_back(lo, hi);
        seg_offset_.push_back(segments_.size());
        if (hi < lo) continue;

        events.clear();
        for (Vertex u : clique) {
            if (blocked[u].second < blocked[u].first) continue;
            events.emplace_back(blocked[u].first, 1);
            events.emplace_back(blocked[u].second + 1, -1);
        }
        std::sort(events.begin(), events.end());
        int k = 0;
        std::size_t e = 0;
        while (e < events.size() && events[e].first <= lo) k += events[e++].second;
        segments_.push_back({lo, k});
        while (e < events.size() && events[e].first <= hi) {
            const int at = events[e].first;
            while (e < events.size() && events[e].first == at) k += events[e++].second;
            if (k != segments_.back().covered) segments_.push_back({at, k});
        }
    }
    seg_offset_.push_back(segments_.size());
}

int CandidateSets::first_at_most(int node, int nl, int nr, int from, int to, int k) const {
    if (nr < from || nl > to || tree_min_[node] > k) return -1;
    if (nl == nr) return nl;
    const int mid = (nl + nr) / 2;
    const int r = first_at_most(2 * node, nl, mid, from, to, k);
    return r >= 0 ? r : first_at_most(2 * node + 1, mid + 1, nr, from, to, k);
}

int CandidateSets::last_at_most(int node, int nl, int nr, int from, int to, int k) const {
    if (nr < from || nl > to || tree_min_[node] > k) return -1;
    if (nl == nr) return nl;
    const int mid = (nl + nr) / 2;
    const int r = last_at_most(2 * node + 1, mid + 1, nr, from, to, k);
    return r >= 0 ? r : last_at_most(2 * node, nl, mid, from, to, k);
}

int CandidateSets::first_above(int node, int nl, int nr, int from, int to, int k) const {
    if (nr < from || nl > to || tree_max_[node] <= k) return -1;
    if (nl == nr) return nl;
    const int mid = (nl + nr) / 2;
    const int r = first_above(2 * node, nl, mid, from, to, k);
    return r >= 0 ? r : first_above(2 * node + 1, mid + 1, nr, from, to, k);
}

int CandidateSets::segment_end(int clique, std::size_t s) const {
    return s + 1 < seg_offset_[clique + 1] ? segments_[s + 1].start - 1 : base_[clique].second;
}

int CandidateSets::first_cell(int clique, int from) const {
    for (std::size_t s = seg_offset_[clique]; s < seg_offset_[clique + 1]; ++s) {
        const int end = segment_end(clique, s);
        if (end < from) continue;
        const int r = first_at_most(1, 0, cells_ - 1, std::max(from, segments_[s].start), end, segments_[s].covered);
        if (r >= 0) return r;
    }
    return -1;
}

int CandidateSets::last_cell(int clique) const {
    for (std::size_t s = seg_offset_[clique + 1]; s-- > seg_offset_[clique];) {
        const int r = last_at_most(1, 0, cells_ - 1, segments_[s].start, segment_end(clique, s), segments_[s].covered);
        if (r >= 0) return r;
    }
    return -1;
}

int CandidateSets::inf_key(int clique) const {
    const int c = first_cell(clique, 0);
    return c == 0 ? -1 : (c - 1) / 2;
}

int CandidateSets::sup_key(int clique) const {
    return last_cell(clique) / 2;
}

std::vector<std::pair<int, int>> CandidateSets::runs(int clique) const {
    std::vector<std::pair<int, int>> out;
    for (std::size_t s = seg_offset_[clique]; s < seg_offset_[clique + 1]; ++s) {
        const int end = segment_end(clique, s);
        const int k = segments_[s].covered;
        int x = first_at_most(1, 0, cells_ - 1, segments_[s].start, end, k);
        while (x >= 0) {
            const int y = first_above(1, 0, cells_ - 1, x, end, k);
            const int stop = y < 0 ? end : y - 1;
            if (!out.empty() && out.back().second + 1 == x) out.back().second = stop;
            else out.emplace_back(x, stop);
            if (y < 0) break;
            x = first_at_most(1, 0, cells_ - 1, y, end, k);
        }
    }
    return out;
}

std::vector<CandidatePiece> CandidateSets::pieces(int clique) const {
    const Line& line = *line_;
    std::vector<CandidatePiece> out;
    for (auto [a, b] : runs(clique)) {
        CandidatePiece p;
        if (a == 0) {
            p.lo = ExtCoord::neg_inf();
            p.lo_open = true;
        } else {
            p.lo = ExtCoord(line.point((a - 1) / 2));
            p.lo_open = a % 2 == 0;
        }
        if (b % 2 == 1) {
            p.hi = ExtCoord(line.point((b - 1) / 2));
        } else {
            const int next = b / 2;
            p.hi = next < line.size() ? ExtCoord(line.point(next)) : ExtCoord::pos_inf();
            p.hi_open = true;
        }
        out.push_back(p);
    }
    return out;
}

Outcome<CandidateSets> compute_candidate_sets(const Instance& inst, const Line& line, const CliqueSet& cliques) {
    CandidateSets sets(inst, line, cliques);
    for (int c = 0; c < sets.size(); ++c)
        if (sets.empty(c))
            return Unsat{UnsatReason::EmptyCandidateSet, "clique " + std::to_string(c) + " has no admissible clique point"};
    return sets;
}

Outcome<std::vector<Position>> place_clique_points(const Instance& inst, const Line& line, const CliqueSet& cliques,
                                                   std::span<const int> order) {
    const int k = static_cast<int>(order.size());
    std::vector<int> at(k);
    for (int i = 0; i < k; ++i) at[order[i]] = i;

    // strict limits from vertices entirely before / after each place in the order
    const Position top{line.size(), 1};
    std::vector<Position> floor(k + 1, Position::bottom()), ceiling(k + 1, top);
    for (Vertex v = 0; v < inst.n(); ++v) {
        int lo = k, hi = -1;
        for (int c : cliques.of_vertex[v]) lo = std::min(lo, at[c]), hi = std::max(hi, at[c]);
        const auto& [left, right] = inst.bounds[v];
        if (right.lo.finite()) floor[hi + 1] = std::max(floor[hi + 1], line.at(right.lo.value()));
        if (left.hi.finite() && lo > 0) ceiling[lo - 1] = std::min(ceiling[lo - 1], line.at(left.hi.value()));
    }
    for (int i = 1; i < k; ++i) floor[i] = std::max(floor[i], floor[i - 1]);
    for (int i = k - 2; i >= 0; --i) ceiling[i] = std::min(ceiling[i], ceiling[i + 1]);

    std::vector<Position> points(k);
    Position prev = Position::bottom();
    for (int i = 0; i < k; ++i) {
        const int c = order[i];
        AnchoredBound window{-1, line.size()};
        for (Vertex u : cliques.cliques[c]) {
            window.lo = std::max(window.lo, line.lower_anchor(inst.bounds[u].left.lo));
            window.hi = std::min(window.hi, line.upper_anchor(inst.bounds[u].right.hi));
        }
        const Position strict = std::max(prev, floor[i]);
        Position next = strict.is_bottom() ? Position{-1, 1} : strict.fresh_after();
        if (window.lo >= 0 && strict < window.lower()) next = window.lower();
        if (!window.admits_upper(next) || !(next < ceiling[i]))
            return Unsat{UnsatReason::PlacementFailed, "no room for the clique point of clique " + std::to_string(c)};
        points[c] = next;
        prev = next;
    }
    return points;
}

Representation intervals_from_clique_points(const Instance& inst, const Line& line, const CliqueSet& cliques,
                                            std::span<const Position> points) {
    const int n = inst.n();
    std::vector<Position> ends(2 * static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
        Position lo = points[cliques.of_vertex[v].front()];
        Position hi = lo;
        for (int c : cliques.of_vertex[v]) {
            lo = std::min(lo, points[c]);
            hi = std::max(hi, points[c]);
        }
        const auto& [left, right] = inst.bounds[v];
        if (left.hi.finite()) lo = std::min(lo, line.at(left.hi.value()));
        if (right.lo.finite()) hi = std::max(hi, line.at(right.lo.value()));
        ends[2 * v] = lo;
        ends[2 * v + 1] = hi;
    }
    const auto xs = line.materialize(ends);
    Representation rep;
    rep.intervals.reserve(n);
    for (Vertex v = 0; v < n; ++v) rep.intervals.push_back({xs[2 * v], xs[2 * v + 1]});
    return rep;
}

SolveResult solve_bounded_interval(const Instance& inst, IntervalTrace* trace) {
    return solve_bounded_interval(inst, Line::of_instance(inst), trace);
}

SolveResult solve_bounded_interval(const Instance& raw, const Line& line, IntervalTrace* trace) {
    auto normalized = normalize_bounds(raw);
    if (!normalized) return SolveResult::no(normalized.unsat());
    const Instance& inst = normalized.value();
    if (inst.n() == 0) return SolveResult::yes({});

    auto cliques = maximal_cliques(inst.graph);
    if (!cliques) return SolveResult::no(cliques.unsat());
    const CliqueSet& cs = cliques.value();
    if (trace) trace->cliques = cs;

    auto sets = compute_candidate_sets(inst, line, cs);
    if (!sets) return SolveResult::no(sets.unsat());

    auto tree = build_pqtree(cs);
    if (!tree) return SolveResult::no(tree.unsat());
    if (trace) trace->pqtree = tree.value().str();

    const int k = sets.value().size();
    std::vector<int> lower(k), upper(k);
    for (int c = 0; c < k; ++c) {
        lower[c] = sets.value().sup_key(c);
        upper[c] = sets.value().inf_key(c);
    }
    // I_v covers r(L_v) .. l(R_v) side of its clique points, so the block of
    // v's cliques is ordered against everything disjoint from it as well
    std::vector<BlockHandles> blocks;
    blocks.reserve(inst.n());
    for (Vertex v = 0; v < inst.n(); ++v)
        blocks.push_back({cs.of_vertex[v], line.upper_anchor(inst.bounds[v].left.hi),
                          line.lower_anchor(inst.bounds[v].right.lo)});
    auto order = constrained_frontier(tree.value(), lower, upper, blocks);
    if (!order) return SolveResult::no(order.unsat());
    if (trace) trace->order = order.value();

    auto points = place_clique_points(inst, line, cs, order.value());
    if (!points) return SolveResult::no(points.unsat());
    if (trace) trace->points = points.value();

    return SolveResult::yes(intervals_from_clique_points(inst, line, cs, points.value()));
}

} // namespace boundrep
