#ifndef BOUNDREP_INTERVAL_SOLVER_HPP
#define BOUNDREP_INTERVAL_SOLVER_HPP

#include "boundrep/chordal.hpp"
#include "boundrep/line.hpp"

#include <string>
#include <utility>
#include <vector>

namespace boundrep {

/// One maximal piece of a candidate set; open ends are excluded.
struct CandidatePiece {
    ExtCoord lo;
    bool lo_open = false;
    ExtCoord hi;
    bool hi_open = false;
};

/// Where each maximal clique may put its clique point: the common part of
/// its members' [l(L_u), r(R_u)] minus the blocked parts [r(L_v), l(R_v)]
/// of all vertices outside the clique. Stored as cells of a Line and
/// queried lazily; listing all pieces is only needed for inspection.
class CandidateSets {
public:
    /// `inst` must be normalized and `line` must contain all of its endpoints.
    CandidateSets(const Instance& inst, const Line& line, const CliqueSet& cliques);

    int size() const { return static_cast<int>(base_.size()); }
    bool empty(int clique) const { return first_cell(clique, 0) < 0; }

    /// First cell >= `from` that belongs to the set, or -1.
    int first_cell(int clique, int from) const;
    /// Last cell of the set, or -1.
    int last_cell(int clique) const;

    /// Anchor key of inf(J_C): anchor index, -1 for -inf.
    int inf_key(int clique) const;
    /// Anchor key of sup(J_C): anchor index, line size for +inf.
    int sup_key(int clique) const;

    /// Maximal runs of cells, inclusive, left to right.
    std::vector<std::pair<int, int>> runs(int clique) const;
    std::vector<CandidatePiece> pieces(int clique) const;

private:
    struct Segment {
        int start;
        int covered; // blocked intervals of the clique's own members over this segment
    };

    int first_at_most(int node, int nl, int nr, int from, int to, int k) const;
    int last_at_most(int node, int nl, int nr, int from, int to, int k) const;
    int first_above(int node, int nl, int nr, int from, int to, int k) const;
    int segment_end(int clique, std::size_t s) const;

    const Line* line_;
    int cells_ = 0;
    std::vector<int> tree_min_;
    std::vector<int> tree_max_;
    std::vector<std::pair<int, int>> base_;
    std::vector<std::size_t> seg_offset_;
    std::vector<Segment> segments_;
};

/// Checks nonemptiness of every candidate set (EmptyCandidateSet otherwise).
Outcome<CandidateSets> compute_candidate_sets(const Instance& inst, const Line& line, const CliqueSet& cliques);

/// Subset ordering of candidate sets: a must get its clique point left of b's.
inline bool clique_precedes(const CandidateSets& sets, int a, int b) {
    return sets.sup_key(a) <= sets.inf_key(b);
}

/// Greedy left-to-right clique points along `order`, each the leftmost
/// admissible position strictly right of the previous one. Besides the
/// members' bounds, a clique point must stay left of r(L_v) for every vertex
/// v whose cliques all come later, and right of l(R_v) for every vertex
/// whose cliques all come earlier, since I_v reaches those points.
/// Indexed by clique. PlacementFailed if some clique finds no room.
Outcome<std::vector<Position>> place_clique_points(const Instance& inst, const Line& line, const CliqueSet& cliques,
                                                   std::span<const int> order);

/// l(I_v) = min(r(L_v), clique points of v), r(I_v) = max(l(R_v), clique
/// points of v), infinite bound terms dropped.
Representation intervals_from_clique_points(const Instance& inst, const Line& line, const CliqueSet& cliques,
                                            std::span<const Position> points);

struct IntervalTrace {
    CliqueSet cliques;
    std::string pqtree;
    std::vector<int> order;
    std::vector<Position> points;
};

SolveResult solve_bounded_interval(const Instance& inst, IntervalTrace* trace = nullptr);
/// Same, with the sorted endpoints supplied by the caller.
SolveResult solve_bounded_interval(const Instance& inst, const Line& line, IntervalTrace* trace = nullptr);

} // namespace boundrep

#endif
