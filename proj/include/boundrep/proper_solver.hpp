#ifndef BOUNDREP_PROPER_SOLVER_HPP
#define BOUNDREP_PROPER_SOLVER_HPP

#include "boundrep/line.hpp"

#include <span>
#include <vector>

namespace boundrep {

/// Components with their handles LH(C) = min r(L_v), UH(C) = max l(R_v).
/// C must come before C' whenever LH(C) <= UH(C').
struct ComponentOrder {
    std::vector<std::vector<Vertex>> components;
    std::vector<ExtCoord> lower_handle;
    std::vector<ExtCoord> upper_handle;
    std::vector<int> order; // component indices, left to right
};

/// `inst` must be normalized. NoLinearExtension if the precedence has a cycle.
Outcome<ComponentOrder> component_order(const Instance& inst);

/// Umbrella order of one connected component, with its runs of vertices
/// sharing a closed neighbourhood.
struct CanonicalOrder {
    std::vector<Vertex> order;
    std::vector<std::vector<Vertex>> groups; // consecutive in `order`
};

/// Every closed neighbourhood is a contiguous block of `order` (which must
/// list the vertices of a union of components).
bool is_umbrella_order(const Graph& g, std::span<const Vertex> order);

/// Three LexBFS sweeps, then the umbrella check. NotProperInterval if it fails.
Outcome<CanonicalOrder> canonical_order(const Graph& g, std::span<const Vertex> component);

/// Forced precedences inside one group: u -> v when L_u lies left of L_v or
/// R_u left of R_v (touching allowed). Any cycle forces equal intervals.
struct GroupPrecedence {
    std::vector<std::vector<int>> arcs;      // by position in the group
    std::vector<std::vector<Vertex>> sccs;   // topological order, ties by smallest member
};

GroupPrecedence group_precedence(const Instance& inst, std::span<const Vertex> group);

/// A component with every strongly connected part of a group merged into
/// one item. Items are listed group by group in canonical order.
struct ReducedComponent {
    std::vector<std::vector<Vertex>> members;
    std::vector<Bound> left;  // intersection of the members' left bounds
    std::vector<Bound> right;
    std::vector<std::pair<int, int>> groups; // item ranges [first, last)
    Graph graph;                             // on items
};

/// EmptyContractedBound if some merged bound is empty.
Outcome<ReducedComponent> contract_and_order(const Instance& inst, const CanonicalOrder& canonical);

struct EndpointSymbol {
    int item;
    bool right;
    friend bool operator==(const EndpointSymbol&, const EndpointSymbol&) = default;
};

/// Left-to-right endpoint sequence of a proper representation whose left
/// endpoints follow `order` strictly: r_i goes right before l_j for the
/// first non-neighbour j after i, or to the end.
std::vector<EndpointSymbol> common_endpoint_order(const Graph& g, std::span<const int> order);

/// Left-to-right order of the items, as classes of items that get the same
/// interval (mostly singletons).
using ItemOrder = std::vector<std::vector<int>>;

/// Item order for one orientation. The groups keep their canonical order
/// (reversed if asked); inside a group the items follow the forced
/// precedences. Where a right endpoint can only respect its bound by sharing
/// the position of the left endpoint just before it, the items pinned to
/// that position move to the front or back of their group, tied into one
/// class. BoundExceeded if no order fits.
Outcome<ItemOrder> item_order(const ReducedComponent& reduced, const Line& line, Position start, bool reversed);

struct LeftmostRep {
    std::vector<Position> left; // by item
    std::vector<Position> right;
    Position rightmost;
};

/// Endpoints placed greedily at their leftmost admissible positions, all
/// strictly right of `start`. A right endpoint right after a left endpoint
/// may share its position. BoundExceeded if some endpoint cannot be placed.
Outcome<LeftmostRep> leftmost_representation(const ReducedComponent& reduced, const Line& line,
                                             const ItemOrder& order, Position start);

struct ProperTrace {
    std::vector<std::vector<Vertex>> components; // in placement order
    std::vector<CanonicalOrder> canonical;
    std::vector<ReducedComponent> reduced;
    std::vector<ItemOrder> item_orders;
    std::vector<bool> reversed;
};

SolveResult solve_bounded_proper(const Instance& inst, ProperTrace* trace = nullptr);
SolveResult solve_bounded_proper(const Instance& inst, const Line& line, ProperTrace* trace = nullptr);

} // namespace boundrep

#endif
