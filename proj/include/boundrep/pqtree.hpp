#ifndef BOUNDREP_PQTREE_HPP
#define BOUNDREP_PQTREE_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace boundrep {

/// PQ-tree over leaves 0..n-1 with Booth-Lueker reduction.
///
/// Children lists are doubly linked without a fixed direction, so a Q-node
/// can be spliced into its parent in either orientation in O(1). Children of
/// a Q-node reach their parent through a union-find set that is merged when
/// Q-nodes are absorbed into each other.
class PQTree {
public:
    enum class Kind { Leaf, P, Q };

    explicit PQTree(int leaves);

    int leaf_count() const { return leaves_; }

    /// Restricts the frontiers to those where `leaf_set` is consecutive.
    /// Returns false when no frontier qualifies; the tree is then left in an
    /// unspecified state and must not be reduced further.
    bool reduce(std::span<const int> leaf_set);

    int root() const { return root_; }
    Kind kind(int node) const { return nodes_[node].kind; }
    /// Leaf number of a leaf node (leaf i is node i).
    int leaf_of(int node) const { return node; }
    /// Children in sibling order (the stored orientation for Q-nodes).
    std::vector<int> children(int node) const;

    std::vector<int> frontier() const;
    /// Bracketed dump, e.g. "P[0 Q[1 2 3] 4]".
    std::string str() const;

    /// Every frontier, stopping after `limit` of them.
    std::vector<std::vector<int>> all_frontiers(std::size_t limit = 1000000) const;

private:
    enum class Label : unsigned char { Empty, Partial, Full };

    struct Node {
        Kind kind = Kind::Leaf;
        int sib[2] = {-1, -1};
        int end[2] = {-1, -1};
        int child_count = 0;
        int parent_elem = -1;
        int own_elem = -1;
        // per-reduction scratch, valid when stamp matches
        int stamp = -1;
        int cached_parent = -1;
        int marked_children = 0;
        int processed_children = 0;
        int pertinent_leaves = 0;
        Label label = Label::Empty;
        std::vector<int> full;
        std::vector<int> partial;
    };

    int new_node(Kind k);
    int new_elem(int owner);
    int find(int elem);
    void merge_into(int from_node, int into_node);
    int parent_of(int node);

    Node& scratch(int node);
    Label label(int node) const;

    int other_sib(int node, int from) const;
    void replace_sib(int node, int old_value, int new_value);
    void set_free_slot(int node, int value);
    void unlink_child(int parent, int child);
    void append_child(int parent, int child, int side);
    void replace_node(int old_node, int new_node_id);
    void splice(int parent, int q_child, int toward_end0, int toward_end1);
    int gather_p(std::span<const int> kids, int from_parent);

    int template_nonroot(int node);
    bool template_root(int node);
    bool template_q_nonroot(int node);
    bool template_q_root(int node);

    void frontier_into(int node, std::vector<int>& out) const;
    void dump_into(int node, std::string& out) const;

    int leaves_;
    int root_ = -1;
    int stamp_ = 0;
    std::vector<Node> nodes_;
    std::vector<int> elem_parent_;
    std::vector<int> elem_owner_;
    std::vector<int> elem_size_;
};

} // namespace boundrep

#endif
