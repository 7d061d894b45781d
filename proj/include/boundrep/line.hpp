#ifndef BOUNDREP_LINE_HPP
#define BOUNDREP_LINE_HPP

#include "boundrep/instance.hpp"

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace boundrep {

/// Order-only position on a Line: `rank` fresh steps strictly right of the
/// anchor point (rank 0 is the anchor itself). Anchor -1 stands for the open
/// ray left of every anchor point, so {-1, 0} is -infinity.
///
/// Every point with anchor a lies strictly left of anchor point a + 1, which
/// makes lexicographic comparison agree with the line order.
struct Position {
    int anchor = -1;
    std::int64_t rank = 0;

    static constexpr Position bottom() { return {-1, 0}; }
    bool is_bottom() const { return anchor < 0 && rank == 0; }
    Position fresh_after() const { return {anchor, rank + 1}; }

    friend auto operator<=>(const Position&, const Position&) = default;
};

/// Bound whose ends are anchor indices of a Line (lo = -1 for -inf,
/// hi = line size for +inf).
struct AnchoredBound {
    int lo = -1;
    int hi = 0;

    bool admits_lower(const Position& p) const { return p.anchor >= lo; }
    bool admits_upper(const Position& p) const { return p.anchor < hi || (p.anchor == hi && p.rank == 0); }
    bool contains(const Position& p) const { return !p.is_bottom() && admits_lower(p) && admits_upper(p); }
    /// Smallest position satisfying the lower end ({-1,0} when unbounded).
    Position lower() const { return {lo, 0}; }
    bool empty() const { return hi < lo; }
};

/// Sorted set of distinct anchor points, normally every finite bound endpoint
/// of an instance. Positions between anchors are symbolic until materialized.
class Line {
public:
    Line() = default;
    explicit Line(std::vector<Rational> points);
    static Line of_instance(const Instance& inst);

    int size() const { return static_cast<int>(points_.size()); }
    const Rational& point(int i) const { return points_[i]; }
    const std::vector<Rational>& points() const { return points_; }

    /// Index of a finite anchor point; throws std::out_of_range if absent.
    int index_of(const Rational& x) const;
    /// Anchor index of a lower end (-1 for -inf).
    int lower_anchor(const ExtCoord& x) const;
    /// Anchor index of an upper end (size() for +inf).
    int upper_anchor(const ExtCoord& x) const;
    AnchoredBound anchor(const Bound& b) const { return {lower_anchor(b.lo), upper_anchor(b.hi)}; }
    Position at(const Rational& x) const { return {index_of(x), 0}; }

    /// Elementary cells: 2a+1 is anchor point a, 2a+2 the open gap right of it,
    /// 0 the ray left of all anchors. There are 2*size()+1 cells.
    int cell_count() const { return 2 * size() + 1; }
    static int cell_of(const Position& p) { return p.rank == 0 ? 2 * p.anchor + 1 : 2 * p.anchor + 2; }

    /// Concrete coordinates for a set of positions. Fresh points in a gap are
    /// spread evenly across it; past the outermost anchors they step by 1.
    /// The result preserves the order of the positions and their relation
    /// to all anchor points.
    std::vector<Rational> materialize(std::span<const Position> positions) const;

private:
    std::vector<Rational> points_;
};

} // namespace boundrep

#endif
