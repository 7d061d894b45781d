#ifndef BOUNDREP_INSTANCE_HPP
#define BOUNDREP_INSTANCE_HPP

#include "boundrep/geometry.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace boundrep {

using Vertex = int;

/// Simple undirected graph with sorted adjacency lists.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(n) {}
    /// Throws std::invalid_argument on self-loops, duplicate edges or out-of-range vertices.
    Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges);

    int n() const { return static_cast<int>(adj_.size()); }
    std::size_t m() const { return edges_.size(); }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
    const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }
    bool adjacent(Vertex u, Vertex v) const;

    /// Subgraph induced by `vertices` (relabelled 0..k-1 in the given order).
    Graph induced(std::span<const Vertex> vertices) const;

    /// Connected components, each sorted, ordered by smallest vertex.
    std::vector<std::vector<Vertex>> components() const;

private:
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::pair<Vertex, Vertex>> edges_;
};

enum class GraphClass { Interval, ProperInterval };

std::string to_string(GraphClass c);
GraphClass parse_graph_class(std::string_view text);

/// Left bound (where l(I_v) may lie) and right bound (where r(I_v) may lie).
struct BoundPair {
    Bound left;
    Bound right;
    friend bool operator==(const BoundPair&, const BoundPair&) = default;
};

struct Instance {
    Graph graph;
    std::vector<BoundPair> bounds;
    GraphClass cls = GraphClass::Interval;

    int n() const { return graph.n(); }
    /// All bounds unbounded on both sides.
    static Instance unbounded(Graph g, GraphClass cls = GraphClass::Interval);
};

struct Representation {
    std::vector<Interval> intervals;
    friend bool operator==(const Representation&, const Representation&) = default;
};

enum class UnsatReason {
    EmptyBound,
    NotChordal,
    NoConsecutiveOrder,
    EmptyCandidateSet,
    Infeasible,
    PlacementFailed,
    NotProperInterval,
    NoLinearExtension,
    EmptyContractedBound,
    BoundExceeded,
};

std::string to_string(UnsatReason r);

struct Unsat {
    UnsatReason reason;
    std::string detail;
};

/// Either a value or an Unsat verdict.
template <class T>
class Outcome {
public:
    Outcome(T value) : state_(std::move(value)) {}
    Outcome(Unsat u) : state_(std::move(u)) {}

    bool ok() const { return state_.index() == 0; }
    explicit operator bool() const { return ok(); }
    T& value() { return std::get<0>(state_); }
    const T& value() const { return std::get<0>(state_); }
    const Unsat& unsat() const { return std::get<1>(state_); }

private:
    std::variant<T, Unsat> state_;
};

/// Final answer of a solver.
struct SolveResult {
    std::optional<Representation> representation;
    std::optional<Unsat> unsat;

    bool sat() const { return representation.has_value(); }
    static SolveResult yes(Representation r) { return {std::move(r), std::nullopt}; }
    static SolveResult no(Unsat u) { return {std::nullopt, std::move(u)}; }
};

/// Tighten l(R_v) up to l(L_v) and r(L_v) down to r(R_v). Fails with
/// EmptyBound when a bound becomes empty, i.e. no l(I_v) <= r(I_v) exists.
Outcome<Instance> normalize_bounds(const Instance& inst);

struct Violation {
    enum class Kind { LeftBound, RightBound, Degenerate, MissingEdge, ExtraEdge, ProperContainment, SizeMismatch };
    Kind kind;
    Vertex u = -1;
    Vertex v = -1;
    std::string message;
};

std::string to_string(Violation::Kind k);

/// Lists violated bounds, intersection-graph mismatches and (for the proper
/// class) proper containments. An empty report means `rep` is a valid
/// bounded representation of `inst`.
struct CheckReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

CheckReport check_representation(const Instance& inst, const Representation& rep);

/// Raised by the reductions below when their input is inconsistent.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Partial representation extension: predrawn vertices get singleton bounds.
/// Throws InvalidInput if the predrawn intervals do not represent the
/// subgraph they induce.
Instance reduce_repext(const Graph& g, const std::map<Vertex, Interval>& predrawn,
                       GraphClass cls = GraphClass::Interval);

/// A_v subset I_v subset B_v. A missing inner set gives SubSet, a missing
/// outer set SuperSet. Throws InvalidInput when A_v is not inside B_v.
Instance reduce_inclusion(const Graph& g, std::span<const std::optional<Interval>> inner,
                          std::span<const std::optional<Interval>> outer, GraphClass cls = GraphClass::Interval);

} // namespace boundrep

#endif
