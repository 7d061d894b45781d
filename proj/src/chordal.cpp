#include "boundrep/chordal.hpp"

#include <algorithm>
#include <numeric>

namespace boundrep {

namespace {

struct Cell {
    int head = -1;
    int tail = -1;
    int size = 0;
    int twin = -1;
    int stamp = -1;
};

} // namespace

std::vector<Vertex> lex_bfs(const Graph& g, std::span<const int> priority) {
    const int n = g.n();
    std::vector<int> rank(n);
    if (priority.empty()) std::iota(rank.begin(), rank.end(), 0);
    else rank.assign(priority.begin(), priority.end());

    std::vector<Vertex> by_rank(n);
    std::iota(by_rank.begin(), by_rank.end(), 0);
    std::sort(by_rank.begin(), by_rank.end(), [&](int a, int b) { return rank[a] < rank[b]; });

    // adjacency in rank order, so refined cells stay sorted by rank
    std::vector<std::vector<Vertex>> adj(n);
    for (Vertex v : by_rank)
        for (Vertex w : g.neighbors(v)) adj[w].push_back(v);

    std::vector<int> next(n, -1), prev(n, -1), cell_of(n, 0);
    std::vector<Cell> cells;
    cells.reserve(n + 1);
    cells.push_back({});
    int list_head = n > 0 ? by_rank[0] : -1;
    for (int i = 0; i < n; ++i) {
        const Vertex v = by_rank[i];
        prev[v] = i > 0 ? by_rank[i - 1] : -1;
        next[v] = i + 1 < n ? by_rank[i + 1] : -1;
    }
    if (n > 0) cells[0] = {by_rank[0], by_rank[n - 1], n, -1, -1};

    auto unlink = [&](int v) {
        Cell& c = cells[cell_of[v]];
        if (c.head == v) c.head = (next[v] >= 0 && cell_of[next[v]] == cell_of[v]) ? next[v] : -1;
        if (c.tail == v) c.tail = (prev[v] >= 0 && cell_of[prev[v]] == cell_of[v]) ? prev[v] : -1;
        --c.size;
        if (prev[v] >= 0) next[prev[v]] = next[v];
        else list_head = next[v];
        if (next[v] >= 0) prev[next[v]] = prev[v];
        prev[v] = next[v] = -1;
    };
    auto link_before = [&](int v, int at) {
        prev[v] = prev[at];
        next[v] = at;
        if (prev[at] >= 0) next[prev[at]] = v;
        else list_head = v;
        prev[at] = v;
    };
    auto link_after = [&](int v, int at) {
        next[v] = next[at];
        prev[v] = at;
        if (next[at] >= 0) prev[next[at]] = v;
        next[at] = v;
    };

    std::vector<char> visited(n, 0);
    std::vector<Vertex> order;
    order.reserve(n);
    for (int step = 0; step < n; ++step) {
        const Vertex pivot = list_head;
        unlink(pivot);
        visited[pivot] = 1;
        order.push_back(pivot);
        for (Vertex w : adj[pivot]) {
            if (visited[w]) continue;
            const int c = cell_of[w];
            if (cells[c].stamp != step) {
                cells[c].stamp = step;
                cells[c].twin = static_cast<int>(cells.size());
                cells.push_back({});
            }
            const int nc = cells[c].twin;
            if (cells[c].size == 1) {
                // w is alone: relabel in place, the new cell already ends right before it
                cells[c] = {-1, -1, 0, nc, step};
                cell_of[w] = nc;
                if (cells[nc].size == 0) cells[nc].head = w;
                cells[nc].tail = w;
                ++cells[nc].size;
                continue;
            }
            const int old_head = cells[c].head == w ? next[w] : cells[c].head;
            unlink(w);
            cell_of[w] = nc;
            Cell& target = cells[nc];
            if (target.size > 0) link_after(w, target.tail);
            else link_before(w, old_head);
            if (target.head < 0) target.head = w;
            target.tail = w;
            ++target.size;
        }
    }
    return order;
}

std::vector<Vertex> lex_bfs_plus(const Graph& g, std::span<const Vertex> previous) {
    const int n = g.n();
    std::vector<int> priority(n);
    for (int i = 0; i < n; ++i) priority[previous[i]] = n - 1 - i;
    return lex_bfs(g, priority);
}

namespace {

struct Elimination {
    std::vector<int> pos;
    std::vector<int> parent;
    std::vector<std::vector<Vertex>> later;
};

Elimination eliminate(const Graph& g, std::span<const Vertex> order) {
    const int n = g.n();
    Elimination e{std::vector<int>(n), std::vector<int>(n, -1), std::vector<std::vector<Vertex>>(n)};
    for (int i = 0; i < n; ++i) e.pos[order[i]] = i;
    for (Vertex v = 0; v < n; ++v) {
        for (Vertex w : g.neighbors(v))
            if (e.pos[w] > e.pos[v]) {
                e.later[v].push_back(w);
                if (e.parent[v] < 0 || e.pos[w] < e.pos[e.parent[v]]) e.parent[v] = w;
            }
    }
    return e;
}

bool check_elimination(const Graph& g, const Elimination& e) {
    const int n = g.n();
    // later(v) \ {parent} must lie in N(parent)
    std::vector<std::vector<Vertex>> required(n);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex w : e.later[v])
            if (w != e.parent[v]) required[e.parent[v]].push_back(w);
    std::vector<int> mark(n, -1);
    for (Vertex u = 0; u < n; ++u) {
        if (required[u].empty()) continue;
        for (Vertex w : g.neighbors(u)) mark[w] = u;
        for (Vertex w : required[u])
            if (mark[w] != u) return false;
    }
    return true;
}

} // namespace

bool is_perfect_elimination_order(const Graph& g, std::span<const Vertex> order) {
    if (static_cast<int>(order.size()) != g.n()) return false;
    return check_elimination(g, eliminate(g, order));
}

std::size_t CliqueSet::total_size() const {
    std::size_t s = 0;
    for (const auto& c : cliques) s += c.size();
    return s;
}

Outcome<CliqueSet> maximal_cliques(const Graph& g) {
    const int n = g.n();
    auto order = lex_bfs(g);
    std::reverse(order.begin(), order.end());
    const Elimination e = eliminate(g, order);
    if (!check_elimination(g, e)) return Unsat{UnsatReason::NotChordal, "graph has a chordless cycle of length >= 4"};

    // {v} + later(v) fails to be maximal iff some u with parent v has |later(u)| = |later(v)| + 1
    std::vector<char> dominated(n, 0);
    for (Vertex u = 0; u < n; ++u) {
        const int p = e.parent[u];
        if (p >= 0 && e.later[u].size() == e.later[p].size() + 1) dominated[p] = 1;
    }
    CliqueSet cs;
    cs.of_vertex.resize(n);
    for (Vertex v : order) {
        if (dominated[v]) continue;
        std::vector<Vertex> clique = e.later[v];
        clique.push_back(v);
        std::sort(clique.begin(), clique.end());
        const int id = static_cast<int>(cs.cliques.size());
        for (Vertex w : clique) cs.of_vertex[w].push_back(id);
        cs.cliques.push_back(std::move(clique));
    }
    return cs;
}

} // namespace boundrep
