#include "boundrep/oracle.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <unordered_set>

namespace boundrep {

namespace {

enum : std::uint8_t { NotStarted = 0, Open = 1, Closed = 2 };

struct State {
    std::uint8_t status[32] = {};
    std::uint8_t group[32] = {}; // start order of open vertices (proper class only)
};

struct Event {
    int cell;
    unsigned start;
    unsigned end;
};

class Sweep {
public:
    Sweep(const Instance& inst, std::size_t cap) : inst_(inst), n_(std::min(inst.n(), 8)), cap_(cap) {
        std::set<Rational> pts;
        for (const auto& [l, r] : inst.bounds)
            for (const ExtCoord& x : {l.lo, l.hi, r.lo, r.hi})
                if (x.finite()) pts.insert(x.value());
        anchors_.assign(pts.begin(), pts.end());
        cells_ = 2 * static_cast<int>(anchors_.size()) + 1;
        can_start_.assign(cells_, 0);
        can_end_.assign(cells_, 0);
        last_start_.assign(n_, -1);
        last_end_.assign(n_, -1);
        for (int c = 0; c < cells_; ++c)
            for (Vertex v = 0; v < n_; ++v) {
                if (admits(inst.bounds[v].left, c)) {
                    can_start_[c] |= 1u << v;
                    last_start_[v] = c;
                }
                if (admits(inst.bounds[v].right, c)) {
                    can_end_[c] |= 1u << v;
                    last_end_[v] = c;
                }
            }
        adj_.assign(n_, 0);
        for (auto [u, v] : inst.graph.edges()) {
            adj_[u] |= 1u << v;
            adj_[v] |= 1u << u;
        }
        proper_ = inst.cls == GraphClass::ProperInterval;
    }

    bool run() {
        State s;
        return dfs(0, s);
    }

    Representation witness() const { return to_representation(path_); }
    std::vector<OracleSolution> take_all() { return std::move(all_); }

private:
    // a bound admits a cell if it contains the endpoint, or the whole open gap
    bool admits(const Bound& b, int cell) const {
        const int m = static_cast<int>(anchors_.size());
        if (cell % 2 == 1) return b.contains(anchors_[(cell - 1) / 2]);
        const int g = cell / 2 - 1; // gap between anchors g and g+1
        const ExtCoord left = g >= 0 ? ExtCoord(anchors_[g]) : ExtCoord::neg_inf();
        const ExtCoord right = g + 1 < m ? ExtCoord(anchors_[g + 1]) : ExtCoord::pos_inf();
        return b.lo <= left && right <= b.hi;
    }

    std::uint64_t key(int cell, const State& s) const {
        std::uint64_t k = static_cast<std::uint64_t>(cell);
        for (int v = 0; v < n_; ++v) k = k << 5 | static_cast<std::uint64_t>(s.status[v]) << 3 | s.group[v];
        return k;
    }

    bool dead(int cell, const State& s) const {
        for (Vertex v = 0; v < n_; ++v) {
            if (s.status[v] == NotStarted && last_start_[v] < cell) return true;
            if (s.status[v] != Closed && last_end_[v] < cell) return true;
        }
        return false;
    }

    bool dfs(int cell, const State& s) {
        if (cell == cells_) {
            for (Vertex v = 0; v < n_; ++v)
                if (s.status[v] != Closed) return false;
            if (cap_ > 0) {
                all_.push_back(to_solution(path_));
                return all_.size() >= cap_;
            }
            return true;
        }
        if (dead(cell, s)) return false;
        const std::uint64_t k = key(cell, s);
        if (failed_.count(k)) return false;
        const std::size_t found_before = all_.size();

        const bool gap = cell % 2 == 0;
        if (gap && dfs(cell + 1, s)) return true;

        unsigned fresh = 0, open = 0;
        int groups = 0;
        for (Vertex v = 0; v < n_; ++v) {
            if (s.status[v] == NotStarted && (can_start_[cell] >> v & 1u)) fresh |= 1u << v;
            if (s.status[v] == Open) {
                open |= 1u << v;
                groups = std::max(groups, s.group[v] + 1);
            }
        }
        unsigned closed = 0;
        for (Vertex v = 0; v < n_; ++v)
            if (s.status[v] == Closed) closed |= 1u << v;

        // subsets A of `fresh` to start here
        for (unsigned a = fresh;; a = (a - 1) & fresh) {
            if (compatible_start(a, open, closed)) {
                const unsigned endable = (open | a) & can_end_[cell];
                for (unsigned b = endable;; b = (b - 1) & endable) {
                    State t;
                    if (!(gap && a == 0 && b == 0) && apply(s, a, b, groups, t)) {
                        path_.push_back({cell, a, b});
                        if (dfs(gap ? cell : cell + 1, t)) return true; // keep the path as witness
                        path_.pop_back();
                    }
                    if (b == 0) break;
                }
            }
            if (a == 0) break;
        }
        if (all_.size() == found_before) failed_.insert(k);
        return false;
    }

    bool compatible_start(unsigned a, unsigned open, unsigned closed) const {
        for (Vertex v = 0; v < n_; ++v) {
            if (!(a >> v & 1u)) continue;
            if (adj_[v] & closed) return false;
            const unsigned must_meet = open | (a & ~(1u << v));
            if ((adj_[v] & must_meet) != must_meet) return false;
        }
        return true;
    }

    // proper class: the intervals ending together are exactly the earliest
    // started ones still open, otherwise one of them would be properly contained
    bool apply(const State& s, unsigned a, unsigned b, int groups, State& t) const {
        t = s;
        for (Vertex v = 0; v < n_; ++v)
            if (a >> v & 1u) {
                t.status[v] = Open;
                t.group[v] = proper_ ? static_cast<std::uint8_t>(groups) : 0;
            }
        if (proper_ && b != 0) {
            unsigned first = 0;
            for (Vertex v = 0; v < n_; ++v)
                if (t.status[v] == Open && t.group[v] == 0) first |= 1u << v;
            if (b != first) return false;
        }
        for (Vertex v = 0; v < n_; ++v)
            if (b >> v & 1u) {
                t.status[v] = Closed;
                t.group[v] = 0;
            }
        if (proper_ && b != 0)
            for (Vertex v = 0; v < n_; ++v)
                if (t.status[v] == Open) --t.group[v];
        return true;
    }

    Rational coordinate(int cell, int step) const {
        const int m = static_cast<int>(anchors_.size());
        if (cell % 2 == 1) return anchors_[(cell - 1) / 2];
        const std::int64_t slots = 2 * static_cast<std::int64_t>(n_) + 1;
        if (m == 0) return Rational(step);
        if (cell == 0) return anchors_[0] - Rational(slots - step);
        const int g = cell / 2 - 1;
        if (g + 1 == m) return anchors_[g] + Rational(step);
        return anchors_[g] + (anchors_[g + 1] - anchors_[g]) * Rational(step, slots);
    }

    template <class F>
    void walk(const std::vector<Event>& path, F&& emit) const {
        int step = 0;
        int last_cell = -1;
        for (const Event& e : path) {
            step = e.cell % 2 == 1 ? 0 : (e.cell == last_cell ? step + 1 : 1);
            last_cell = e.cell;
            emit(e, EndpointSlot{e.cell, step});
        }
    }

    Representation to_representation(const std::vector<Event>& path) const {
        Representation rep;
        rep.intervals.resize(n_);
        walk(path, [&](const Event& e, EndpointSlot slot) {
            const Rational x = coordinate(slot.cell, slot.step);
            for (Vertex v = 0; v < n_; ++v) {
                if (e.start >> v & 1u) rep.intervals[v].lo = x;
                if (e.end >> v & 1u) rep.intervals[v].hi = x;
            }
        });
        return rep;
    }

    OracleSolution to_solution(const std::vector<Event>& path) const {
        OracleSolution sol{std::vector<EndpointSlot>(n_), std::vector<EndpointSlot>(n_)};
        walk(path, [&](const Event& e, EndpointSlot slot) {
            for (Vertex v = 0; v < n_; ++v) {
                if (e.start >> v & 1u) sol.left[v] = slot;
                if (e.end >> v & 1u) sol.right[v] = slot;
            }
        });
        return sol;
    }

    const Instance& inst_;
    int n_;
    std::size_t cap_;
    bool proper_ = false;
    std::vector<Rational> anchors_;
    int cells_ = 0;
    std::vector<unsigned> can_start_, can_end_, adj_;
    std::vector<int> last_start_, last_end_;
    std::unordered_set<std::uint64_t> failed_;
    std::vector<Event> path_;
    std::vector<OracleSolution> all_;
};

void check_size(const Instance& inst, int limit) {
    if (inst.n() > limit || inst.n() > 8)
        throw TooLarge("oracle limited to " + std::to_string(std::min(limit, 8)) + " vertices, got " +
                       std::to_string(inst.n()));
}

} // namespace

OracleResult brute_force_solve(const Instance& inst, int limit) {
    check_size(inst, limit);
    Sweep sweep(inst, 0);
    OracleResult out;
    out.sat = sweep.run();
    if (out.sat) out.witness = sweep.witness();
    return out;
}

std::vector<OracleSolution> brute_force_all(const Instance& inst, std::size_t cap, int limit) {
    check_size(inst, limit);
    Sweep sweep(inst, std::max<std::size_t>(cap, 1));
    sweep.run();
    return sweep.take_all();
}

namespace {

ExtCoord draw_end(std::mt19937_64& rng, bool low) {
    if (rng() % 7 == 0) return low ? ExtCoord::neg_inf() : ExtCoord::pos_inf();
    return ExtCoord(static_cast<std::int64_t>(rng() % 6));
}

Bound draw_bound(std::mt19937_64& rng) {
    switch (rng() % 8) {
    case 0: return Bound::unbounded();
    case 1: return Bound::point(Rational(static_cast<std::int64_t>(rng() % 6)));
    default: break;
    }
    ExtCoord lo = draw_end(rng, true);
    ExtCoord hi = draw_end(rng, false);
    if (hi < lo) {
        // keep the bound usable: reflect finite ends, drop the bad infinity
        if (lo.finite() && hi.finite()) std::swap(lo, hi);
        else if (!lo.finite()) hi = ExtCoord::pos_inf();
        else lo = ExtCoord::neg_inf();
    }
    return {lo, hi};
}

Graph graph_from_mask(int n, std::uint64_t mask) {
    std::vector<std::pair<Vertex, Vertex>> e;
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if (mask >> bit & 1u) e.emplace_back(u, v);
    return Graph(n, e);
}

} // namespace

Instance random_small_bounds(const Graph& g, GraphClass cls, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Instance inst = Instance::unbounded(g, cls);
    for (auto& bp : inst.bounds) {
        bp.left = draw_bound(rng);
        bp.right = draw_bound(rng);
    }
    return inst;
}

std::vector<Instance> enumerate_small_instances(std::uint64_t seed, const SmallInstanceCounts& counts,
                                                GraphClass cls) {
    std::mt19937_64 rng(seed);
    std::vector<Instance> out;
    auto all_graphs = [&](int n, int per_graph) {
        const std::uint64_t masks = std::uint64_t{1} << (n * (n - 1) / 2);
        for (std::uint64_t mask = 0; mask < masks; ++mask) {
            const Graph g = graph_from_mask(n, mask);
            for (int i = 0; i < per_graph; ++i) out.push_back(random_small_bounds(g, cls, rng()));
        }
    };
    auto sampled = [&](int n, int count) {
        const int pairs = n * (n - 1) / 2;
        for (int i = 0; i < count; ++i) {
            const std::uint64_t mask = rng() & ((std::uint64_t{1} << pairs) - 1);
            out.push_back(random_small_bounds(graph_from_mask(n, mask), cls, rng()));
        }
    };
    for (int n = 1; n <= 3; ++n) all_graphs(n, counts.per_graph_tiny);
    all_graphs(4, counts.per_graph_n4);
    sampled(5, counts.n5);
    sampled(6, counts.n6);
    return out;
}

} // namespace boundrep
