#ifndef BOUNDREP_CHORDAL_HPP
#define BOUNDREP_CHORDAL_HPP

#include "boundrep/instance.hpp"

#include <span>
#include <vector>

namespace boundrep {

/// Lexicographic breadth-first search by partition refinement, O(n + m).
///
/// Ties are broken by `priority` (smaller value first); an empty span means
/// priority = vertex index. Returns the visiting order.
std::vector<Vertex> lex_bfs(const Graph& g, std::span<const int> priority = {});

/// LexBFS+ sweep: ties broken in favour of the vertex appearing last in `previous`.
std::vector<Vertex> lex_bfs_plus(const Graph& g, std::span<const Vertex> previous);

/// True iff every vertex's neighbours that come later in `order` form a clique.
bool is_perfect_elimination_order(const Graph& g, std::span<const Vertex> order);

struct CliqueSet {
    /// Maximal cliques, members sorted ascending.
    std::vector<std::vector<Vertex>> cliques;
    /// For each vertex, indices of the cliques containing it (ascending).
    std::vector<std::vector<int>> of_vertex;

    std::size_t total_size() const;
};

/// Maximal cliques of a chordal graph from the reversed LexBFS order;
/// NotChordal if that order is not a perfect elimination order.
Outcome<CliqueSet> maximal_cliques(const Graph& g);

} // namespace boundrep

#endif
