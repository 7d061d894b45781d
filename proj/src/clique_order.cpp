#include "boundrep/clique_order.hpp"

#include "boundrep/handles.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace boundrep {

Outcome<PQTree> build_pqtree(const CliqueSet& cliques) {
    PQTree tree(static_cast<int>(cliques.cliques.size()));
    for (std::size_t v = 0; v < cliques.of_vertex.size(); ++v) {
        const auto& list = cliques.of_vertex[v];
        if (list.size() < 2) continue;
        if (!tree.reduce(list))
            return Unsat{UnsatReason::NoConsecutiveOrder,
                         "cliques of vertex " + std::to_string(v) + " cannot be made consecutive"};
    }
    return tree;
}

namespace {

struct Run {
    int first;
    int last;
    int lower;
    int upper;
};

// Is the child sequence (with blocks spanning runs of children) free of
// items that come after something they must precede?
bool runs_respected(std::span<const int> klo, std::span<const int> khi, const std::vector<Run>& runs, bool reversed) {
    const int k = static_cast<int>(klo.size());
    constexpr int none = std::numeric_limits<int>::min();
    std::vector<int> upper_ending(k, none);
    auto at = [&](int i) { return reversed ? k - 1 - i : i; };
    for (int i = 0; i < k; ++i) upper_ending[at(i)] = std::max(upper_ending[at(i)], khi[i]);
    for (const Run& r : runs) {
        const int e = std::max(at(r.first), at(r.last));
        upper_ending[e] = std::max(upper_ending[e], r.upper);
    }
    for (int i = 1; i < k; ++i) upper_ending[i] = std::max(upper_ending[i], upper_ending[i - 1]);
    for (int i = 0; i < k; ++i) {
        const int s = at(i);
        if (s > 0 && klo[i] <= upper_ending[s - 1]) return false;
    }
    for (const Run& r : runs) {
        const int s = std::min(at(r.first), at(r.last));
        if (s > 0 && r.lower <= upper_ending[s - 1]) return false;
    }
    return true;
}

} // namespace

Outcome<std::vector<int>> constrained_frontier(const PQTree& tree, std::span<const int> lower,
                                               std::span<const int> upper, std::span<const BlockHandles> blocks) {
    const int leaves = tree.leaf_count();
    if (leaves == 0) return std::vector<int>{};

    // Pre-order walk: parent links, depth, children lists.
    std::vector<int> pre;
    std::vector<std::vector<int>> kids;
    std::vector<int> slot; // node id -> index in `pre`
    std::vector<int> parent, depth;
    {
        std::vector<std::pair<int, int>> stack{{tree.root(), -1}};
        while (!stack.empty()) {
            auto [x, p] = stack.back();
            stack.pop_back();
            if (static_cast<std::size_t>(x) >= slot.size()) slot.resize(x + 1, -1);
            const int id = static_cast<int>(pre.size());
            slot[x] = id;
            pre.push_back(x);
            parent.push_back(p);
            depth.push_back(p < 0 ? 0 : depth[p] + 1);
            kids.emplace_back();
            if (tree.kind(x) != PQTree::Kind::Leaf) {
                kids[id] = tree.children(x);
                for (auto it = kids[id].rbegin(); it != kids[id].rend(); ++it) stack.emplace_back(*it, id);
            }
        }
    }
    const int nodes = static_cast<int>(pre.size());

    // Leaf ranges in the stored frontier (pre-order visits leaves left to right).
    std::vector<int> first(nodes), last(nodes), pos(leaves);
    {
        int next = 0;
        for (int id = 0; id < nodes; ++id)
            if (tree.kind(pre[id]) == PQTree::Kind::Leaf) {
                pos[tree.leaf_of(pre[id])] = next;
                first[id] = last[id] = next++;
            }
        for (int id = nodes - 1; id >= 0; --id)
            if (!kids[id].empty()) {
                first[id] = first[slot[kids[id].front()]];
                last[id] = last[slot[kids[id].back()]];
            }
    }

    std::vector<int> lo(nodes), hi(nodes);
    for (int id = 0; id < nodes; ++id) {
        lo[id] = std::numeric_limits<int>::max();
        hi[id] = std::numeric_limits<int>::min();
        if (tree.kind(pre[id]) == PQTree::Kind::Leaf) {
            lo[id] = lower[tree.leaf_of(pre[id])];
            hi[id] = upper[tree.leaf_of(pre[id])];
        }
    }
    std::vector<std::vector<Run>> runs(nodes);
    if (!blocks.empty()) {
        int log = 1;
        while ((1 << log) < nodes) ++log;
        std::vector<std::vector<int>> up(log, std::vector<int>(nodes));
        for (int id = 0; id < nodes; ++id) up[0][id] = parent[id] < 0 ? id : parent[id];
        for (int j = 1; j < log; ++j)
            for (int id = 0; id < nodes; ++id) up[j][id] = up[j - 1][up[j - 1][id]];
        auto lca = [&](int a, int b) {
            if (depth[a] < depth[b]) std::swap(a, b);
            for (int j = log - 1; j >= 0; --j)
                if (depth[a] - (1 << j) >= depth[b]) a = up[j][a];
            if (a == b) return a;
            for (int j = log - 1; j >= 0; --j)
                if (up[j][a] != up[j][b]) a = up[j][a], b = up[j][b];
            return up[0][a];
        };
        std::vector<int> leaf_at(leaves);
        for (int id = 0; id < nodes; ++id)
            if (tree.kind(pre[id]) == PQTree::Kind::Leaf) leaf_at[first[id]] = id;

        for (const BlockHandles& b : blocks) {
            if (b.leaves.empty()) continue;
            int bl = leaves, bh = -1;
            for (int leaf : b.leaves) bl = std::min(bl, pos[leaf]), bh = std::max(bh, pos[leaf]);
            if (bh - bl + 1 != static_cast<int>(b.leaves.size()))
                throw std::logic_error("block is not consecutive in the PQ-tree");
            const int x = lca(leaf_at[bl], leaf_at[bh]);
            if (first[x] == bl && last[x] == bh) {
                lo[x] = std::min(lo[x], b.lower);
                hi[x] = std::max(hi[x], b.upper);
                continue;
            }
            if (tree.kind(pre[x]) != PQTree::Kind::Q) throw std::logic_error("block splits a P-node");
            auto child_at = [&](int p) {
                const auto& ks = kids[x];
                auto it = std::upper_bound(ks.begin(), ks.end(), p, [&](int v, int c) { return v < first[slot[c]]; });
                return static_cast<int>(it - ks.begin()) - 1;
            };
            runs[x].push_back({child_at(bl), child_at(bh), b.lower, b.upper});
        }
    }

    std::vector<std::vector<int>> arranged(nodes);
    for (int id = nodes - 1; id >= 0; --id) {
        if (kids[id].empty()) continue;
        std::vector<int> klo, khi;
        for (int c : kids[id]) {
            klo.push_back(lo[slot[c]]);
            khi.push_back(hi[slot[c]]);
            lo[id] = std::min(lo[id], lo[slot[c]]);
            hi[id] = std::max(hi[id], hi[slot[c]]);
        }
        for (const Run& r : runs[id]) {
            lo[id] = std::min(lo[id], r.lower);
            hi[id] = std::max(hi[id], r.upper);
        }
        std::vector<int> idx(kids[id].size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
        bool found = false;
        if (tree.kind(pre[id]) == PQTree::Kind::P) {
            if (auto o = order_by_handles<int>(klo, khi)) {
                idx = std::move(*o);
                found = true;
            }
        } else if (runs_respected(klo, khi, runs[id], false)) {
            found = true;
        } else if (runs_respected(klo, khi, runs[id], true)) {
            std::reverse(idx.begin(), idx.end());
            found = true;
        }
        if (!found) return Unsat{UnsatReason::Infeasible, "no clique order satisfies the bound precedences"};
        for (int i : idx) arranged[id].push_back(slot[kids[id][i]]);
    }

    std::vector<int> order;
    order.reserve(leaves);
    std::vector<int> stack{0};
    while (!stack.empty()) {
        const int id = stack.back();
        stack.pop_back();
        if (arranged[id].empty()) {
            order.push_back(tree.leaf_of(pre[id]));
            continue;
        }
        for (auto it = arranged[id].rbegin(); it != arranged[id].rend(); ++it) stack.push_back(*it);
    }
    return order;
}

} // namespace boundrep
