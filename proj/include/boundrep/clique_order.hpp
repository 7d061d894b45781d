#ifndef BOUNDREP_CLIQUE_ORDER_HPP
#define BOUNDREP_CLIQUE_ORDER_HPP

#include "boundrep/chordal.hpp"
#include "boundrep/pqtree.hpp"

#include <span>
#include <vector>

namespace boundrep {

/// PQ-tree over the maximal cliques whose frontiers are exactly the clique
/// orders in which every vertex's cliques are consecutive.
/// NoConsecutiveOrder if there is none (the graph is not an interval graph).
Outcome<PQTree> build_pqtree(const CliqueSet& cliques);

/// Extra item for constrained_frontier: a set of leaves that is consecutive
/// in every frontier (e.g. the cliques of one vertex), with its own handles.
struct BlockHandles {
    std::span<const int> leaves;
    int lower;
    int upper;
};

/// A frontier of `tree` in which item x precedes item y whenever
/// lower[x] <= upper[y], for any two items covering disjoint leaf sets.
/// Items are the leaves (handles `lower`, `upper`) and the given blocks.
/// Handles are integer keys, e.g. anchor indices on a Line.
/// Infeasible if no frontier satisfies the constraint.
Outcome<std::vector<int>> constrained_frontier(const PQTree& tree, std::span<const int> lower,
                                               std::span<const int> upper,
                                               std::span<const BlockHandles> blocks = {});

} // namespace boundrep

#endif
