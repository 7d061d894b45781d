#include "boundrep/pqtree.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <utility>

namespace boundrep {

PQTree::PQTree(int leaves) : leaves_(leaves) {
    nodes_.reserve(2 * static_cast<std::size_t>(leaves) + 4);
    for (int i = 0; i < leaves; ++i) new_node(Kind::Leaf);
    if (leaves == 1) root_ = 0;
    if (leaves > 1) {
        root_ = new_node(Kind::P);
        for (int i = 0; i < leaves; ++i) append_child(root_, i, 1);
    }
}

int PQTree::new_node(Kind k) {
    const int id = static_cast<int>(nodes_.size());
    nodes_.emplace_back();
    nodes_[id].kind = k;
    if (k != Kind::Leaf) nodes_[id].own_elem = new_elem(id);
    return id;
}

int PQTree::new_elem(int owner) {
    const int e = static_cast<int>(elem_parent_.size());
    elem_parent_.push_back(e);
    elem_owner_.push_back(owner);
    elem_size_.push_back(1);
    return e;
}

int PQTree::find(int elem) {
    while (elem_parent_[elem] != elem) {
        elem_parent_[elem] = elem_parent_[elem_parent_[elem]];
        elem = elem_parent_[elem];
    }
    return elem;
}

void PQTree::merge_into(int from_node, int into_node) {
    int a = find(nodes_[from_node].own_elem);
    int b = find(nodes_[into_node].own_elem);
    if (a == b) return;
    if (elem_size_[a] > elem_size_[b]) std::swap(a, b);
    elem_parent_[a] = b;
    elem_size_[b] += elem_size_[a];
    elem_owner_[b] = into_node;
    nodes_[into_node].own_elem = b;
}

int PQTree::parent_of(int node) {
    const int e = nodes_[node].parent_elem;
    return e < 0 ? -1 : elem_owner_[find(e)];
}

PQTree::Node& PQTree::scratch(int node) {
    Node& x = nodes_[node];
    if (x.stamp != stamp_) {
        x.stamp = stamp_;
        x.cached_parent = -1;
        x.marked_children = 0;
        x.processed_children = 0;
        x.pertinent_leaves = 0;
        x.label = Label::Empty;
        x.full.clear();
        x.partial.clear();
    }
    return x;
}

PQTree::Label PQTree::label(int node) const {
    const Node& x = nodes_[node];
    return x.stamp == stamp_ ? x.label : Label::Empty;
}

int PQTree::other_sib(int node, int from) const {
    const Node& x = nodes_[node];
    return x.sib[0] == from ? x.sib[1] : x.sib[0];
}

void PQTree::replace_sib(int node, int old_value, int new_value) {
    Node& x = nodes_[node];
    if (x.sib[0] == old_value) x.sib[0] = new_value;
    else if (x.sib[1] == old_value) x.sib[1] = new_value;
}

void PQTree::set_free_slot(int node, int value) {
    Node& x = nodes_[node];
    if (x.sib[0] < 0) x.sib[0] = value;
    else x.sib[1] = value;
}

void PQTree::unlink_child(int parent, int child) {
    const int a = nodes_[child].sib[0];
    const int b = nodes_[child].sib[1];
    if (a >= 0) replace_sib(a, child, b);
    if (b >= 0) replace_sib(b, child, a);
    Node& p = nodes_[parent];
    for (int k = 0; k < 2; ++k)
        if (p.end[k] == child) p.end[k] = a >= 0 ? a : b;
    --p.child_count;
    nodes_[child].sib[0] = nodes_[child].sib[1] = -1;
    nodes_[child].parent_elem = -1;
}

void PQTree::append_child(int parent, int child, int side) {
    Node& p = nodes_[parent];
    Node& c = nodes_[child];
    c.parent_elem = p.own_elem;
    if (p.child_count == 0) {
        p.end[0] = p.end[1] = child;
        c.sib[0] = c.sib[1] = -1;
    } else {
        const int e = p.end[side];
        set_free_slot(e, child);
        c.sib[0] = e;
        c.sib[1] = -1;
        p.end[side] = child;
    }
    ++p.child_count;
}

void PQTree::replace_node(int old_node, int new_node_id) {
    const int parent = parent_of(old_node);
    Node& o = nodes_[old_node];
    Node& n = nodes_[new_node_id];
    n.sib[0] = o.sib[0];
    n.sib[1] = o.sib[1];
    n.parent_elem = o.parent_elem;
    for (int s : {o.sib[0], o.sib[1]})
        if (s >= 0) replace_sib(s, old_node, new_node_id);
    if (parent < 0) {
        root_ = new_node_id;
    } else {
        Node& p = nodes_[parent];
        for (int k = 0; k < 2; ++k)
            if (p.end[k] == old_node) p.end[k] = new_node_id;
    }
    o.sib[0] = o.sib[1] = -1;
    o.parent_elem = -1;
}

// Replaces Q-node child `q` of `parent` by its children: q's end[0] joins
// `toward_end0`, q's end[1] joins `toward_end1` (-1 = the parent's outer end).
void PQTree::splice(int parent, int q, int toward_end0, int toward_end1) {
    const int e0 = nodes_[q].end[0];
    const int e1 = nodes_[q].end[1];
    Node& p = nodes_[parent];
    auto fix_end = [&](int e) {
        if (p.end[0] == q) p.end[0] = e;
        else if (p.end[1] == q) p.end[1] = e;
    };
    if (toward_end0 < 0 && toward_end1 < 0) {
        p.end[0] = e0;
        p.end[1] = e1;
    } else {
        if (toward_end0 >= 0) {
            replace_sib(toward_end0, q, e0);
            set_free_slot(e0, toward_end0);
        } else {
            fix_end(e0);
        }
        if (toward_end1 >= 0) {
            replace_sib(toward_end1, q, e1);
            set_free_slot(e1, toward_end1);
        } else {
            fix_end(e1);
        }
    }
    p.child_count += nodes_[q].child_count - 1;
    merge_into(q, parent);
    nodes_[q].child_count = 0;
    nodes_[q].end[0] = nodes_[q].end[1] = -1;
}

int PQTree::gather_p(std::span<const int> kids, int from_parent) {
    for (int k : kids) unlink_child(from_parent, k);
    if (kids.size() == 1) return kids[0];
    const int p = new_node(Kind::P);
    for (int k : kids) append_child(p, k, 1);
    return p;
}

bool PQTree::reduce(std::span<const int> leaf_set) {
    if (leaf_set.size() <= 1) return true;
    ++stamp_;
    const int total = static_cast<int>(leaf_set.size());

    // Mark the union of the leaves' root paths, counting marked children.
    std::vector<int> queue(leaf_set.begin(), leaf_set.end());
    for (int leaf : leaf_set) {
        Node& l = scratch(leaf);
        l.pertinent_leaves = 1;
        l.label = Label::Full;
    }
    for (int leaf : leaf_set) {
        int cur = leaf;
        while (true) {
            const int p = parent_of(cur);
            if (p < 0) break;
            nodes_[cur].cached_parent = p;
            const bool seen = nodes_[p].stamp == stamp_;
            ++scratch(p).marked_children;
            if (seen) break;
            cur = p;
        }
    }

    // Bottom-up: a node is handled once all of its marked children are.
    for (std::size_t i = 0; i < queue.size(); ++i) {
        const int x = queue[i];
        if (nodes_[x].pertinent_leaves == total) return template_root(x);
        const int parent = nodes_[x].cached_parent;
        const int leaves = nodes_[x].pertinent_leaves;
        int result = x;
        if (nodes_[x].kind != Kind::Leaf) {
            result = -1;
            if (nodes_[x].kind == Kind::P) result = template_nonroot(x);
            else if (template_q_nonroot(x)) result = x;
            if (result < 0) return false;
        }
        const Label lab = label(result);
        Node& p = scratch(parent);
        p.pertinent_leaves += leaves;
        (lab == Label::Full ? p.full : p.partial).push_back(result);
        if (++p.processed_children == p.marked_children) queue.push_back(parent);
    }
    return true;
}

// P-node below the pertinent root.
int PQTree::template_nonroot(int x) {
    const std::vector<int> full = nodes_[x].full;
    const std::vector<int> partial = nodes_[x].partial;
    if (static_cast<int>(full.size()) == nodes_[x].child_count) {
        scratch(x).label = Label::Full;
        return x;
    }
    if (partial.size() > 1) return -1;

    auto take_empty_part = [&]() -> int {
        // what is left of x after removing pertinent children
        if (nodes_[x].child_count == 0) return -1;
        if (nodes_[x].child_count == 1) {
            const int lone = nodes_[x].end[0];
            unlink_child(x, lone);
            return lone;
        }
        return x;
    };

    if (partial.empty()) {
        const int full_part = gather_p(full, x);
        const int empty_part = take_empty_part();
        const int q = new_node(Kind::Q);
        replace_node(x, q);
        append_child(q, empty_part, 1);
        append_child(q, full_part, 1);
        scratch(q).label = Label::Partial;
        return q;
    }
    const int q = partial[0];
    const int full_part = full.empty() ? -1 : gather_p(full, x);
    unlink_child(x, q);
    const int empty_part = take_empty_part();
    replace_node(x, q);
    if (empty_part >= 0) append_child(q, empty_part, 0);
    if (full_part >= 0) append_child(q, full_part, 1);
    return q;
}

// Q-node below the pertinent root: pertinent children must run from one end
// as full children followed by at most one partial child. Result is stored
// with end[0] on the empty side.
bool PQTree::template_q_nonroot(int x) {
    const auto full_count = nodes_[x].full.size();
    const auto partial_count = nodes_[x].partial.size();
    if (static_cast<int>(full_count) == nodes_[x].child_count) {
        scratch(x).label = Label::Full;
        return true;
    }
    if (partial_count > 1) return false;
    const std::size_t want = full_count + partial_count;
    for (int side = 0; side < 2; ++side) {
        int prev = -1;
        int cur = nodes_[x].end[side];
        std::size_t consumed = 0;
        while (cur >= 0 && label(cur) == Label::Full) {
            ++consumed;
            const int nx = other_sib(cur, prev);
            prev = cur;
            cur = nx;
        }
        int part = -1;
        if (cur >= 0 && label(cur) == Label::Partial) {
            ++consumed;
            part = cur;
        }
        if (consumed != want) continue;
        if (part >= 0) splice(x, part, other_sib(part, prev), prev);
        if (side == 0) std::swap(nodes_[x].end[0], nodes_[x].end[1]);
        scratch(x).label = Label::Partial;
        return true;
    }
    return false;
}

bool PQTree::template_root(int x) {
    if (nodes_[x].kind == Kind::Q) return template_q_root(x);
    const std::vector<int> full = nodes_[x].full;
    const std::vector<int> partial = nodes_[x].partial;
    if (static_cast<int>(full.size()) == nodes_[x].child_count) return true;
    if (nodes_[x].kind == Kind::Leaf) return true;

    auto collapse_if_single = [&](int only) {
        if (nodes_[x].child_count == 1) {
            unlink_child(x, only);
            replace_node(x, only);
        }
    };

    if (partial.empty()) {
        if (full.size() >= 2) {
            const int fp = gather_p(full, x);
            append_child(x, fp, 1);
        }
        return true;
    }
    if (partial.size() == 1) {
        const int q = partial[0];
        if (!full.empty()) {
            const int fp = gather_p(full, x);
            append_child(q, fp, 1);
        }
        collapse_if_single(q);
        return true;
    }
    if (partial.size() == 2) {
        const int q1 = partial[0];
        const int q2 = partial[1];
        if (!full.empty()) {
            const int fp = gather_p(full, x);
            append_child(q1, fp, 1);
        }
        unlink_child(x, q2);
        // q2's children follow q1's full end in reverse (full side first)
        const int a = nodes_[q1].end[1];
        const int b = nodes_[q2].end[1];
        set_free_slot(a, b);
        set_free_slot(b, a);
        nodes_[q1].end[1] = nodes_[q2].end[0];
        nodes_[q1].child_count += nodes_[q2].child_count;
        merge_into(q2, q1);
        nodes_[q2].child_count = 0;
        collapse_if_single(q1);
        return true;
    }
    return false;
}

// Q-node pertinent root: pertinent children consecutive, partial ones only
// at the two ends of that run.
bool PQTree::template_q_root(int x) {
    const auto full_count = nodes_[x].full.size();
    const auto partial_count = nodes_[x].partial.size();
    if (static_cast<int>(full_count) == nodes_[x].child_count) return true;
    if (partial_count > 2) return false;
    const std::size_t want = full_count + partial_count;
    const int start = full_count > 0 ? nodes_[x].full[0] : nodes_[x].partial[0];

    int prev = start;
    int cur = nodes_[start].sib[0];
    while (cur >= 0 && label(cur) != Label::Empty) {
        const int nx = other_sib(cur, prev);
        prev = cur;
        cur = nx;
    }
    const int outer_a = cur;
    std::vector<int> run;
    int p2 = outer_a;
    int c2 = prev;
    while (c2 >= 0 && label(c2) != Label::Empty) {
        run.push_back(c2);
        const int nx = other_sib(c2, p2);
        p2 = c2;
        c2 = nx;
    }
    const int outer_b = c2;
    if (run.size() != want) return false;
    for (std::size_t i = 1; i + 1 < run.size(); ++i)
        if (label(run[i]) != Label::Full) return false;

    const int first = run.front();
    const int last = run.back();
    if (label(first) == Label::Partial) splice(x, first, outer_a, other_sib(first, outer_a));
    if (last != first && label(last) == Label::Partial) splice(x, last, outer_b, other_sib(last, outer_b));
    return true;
}

std::vector<int> PQTree::children(int node) const {
    std::vector<int> out;
    out.reserve(nodes_[node].child_count);
    int prev = -1;
    int cur = nodes_[node].end[0];
    while (cur >= 0) {
        out.push_back(cur);
        const int nx = other_sib(cur, prev);
        prev = cur;
        cur = nx;
    }
    return out;
}

void PQTree::frontier_into(int node, std::vector<int>& out) const {
    // explicit stack: trees can be deep
    std::vector<int> stack{node};
    while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        if (nodes_[x].kind == Kind::Leaf) {
            out.push_back(x);
            continue;
        }
        auto kids = children(x);
        for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
    }
}

std::vector<int> PQTree::frontier() const {
    std::vector<int> out;
    if (root_ >= 0) frontier_into(root_, out);
    return out;
}

void PQTree::dump_into(int node, std::string& out) const {
    if (nodes_[node].kind == Kind::Leaf) {
        out += std::to_string(node);
        return;
    }
    out += nodes_[node].kind == Kind::P ? "P[" : "Q[";
    bool first = true;
    for (int c : children(node)) {
        if (!first) out += ' ';
        first = false;
        dump_into(c, out);
    }
    out += ']';
}

std::string PQTree::str() const {
    std::string out;
    if (root_ >= 0) dump_into(root_, out);
    return out;
}

std::vector<std::vector<int>> PQTree::all_frontiers(std::size_t limit) const {
    std::function<std::vector<std::vector<int>>(int)> rec = [&](int node) -> std::vector<std::vector<int>> {
        if (nodes_[node].kind == Kind::Leaf) return {{node}};
        const auto kids = children(node);
        std::vector<std::vector<std::vector<int>>> sub;
        for (int c : kids) sub.push_back(rec(c));
        std::vector<std::vector<int>> arrangements;
        std::vector<int> idx(kids.size());
        std::iota(idx.begin(), idx.end(), 0);
        if (nodes_[node].kind == Kind::P) {
            do arrangements.push_back(idx);
            while (std::next_permutation(idx.begin(), idx.end()));
        } else {
            arrangements.push_back(idx);
            std::reverse(idx.begin(), idx.end());
            arrangements.push_back(idx);
        }
        std::vector<std::vector<int>> out;
        for (const auto& arr : arrangements) {
            std::vector<std::vector<int>> partial{{}};
            for (int k : arr) {
                std::vector<std::vector<int>> next;
                for (const auto& pre : partial)
                    for (const auto& tail : sub[k]) {
                        auto joined = pre;
                        joined.insert(joined.end(), tail.begin(), tail.end());
                        next.push_back(std::move(joined));
                        if (next.size() >= limit) break;
                    }
                partial = std::move(next);
            }
            for (auto& f : partial) {
                out.push_back(std::move(f));
                if (out.size() >= limit) return out;
            }
        }
        return out;
    };
    if (root_ < 0) return {};
    return rec(root_);
}

} // namespace boundrep
