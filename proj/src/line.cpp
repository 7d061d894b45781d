#include "boundrep/line.hpp"

#include <algorithm>
#include <stdexcept>

namespace boundrep {

Line::Line(std::vector<Rational> points) : points_(std::move(points)) {
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

Line Line::of_instance(const Instance& inst) {
    std::vector<Rational> pts;
    pts.reserve(4 * inst.bounds.size());
    auto add = [&](const ExtCoord& x) {
        if (x.finite()) pts.push_back(x.value());
    };
    for (const auto& bp : inst.bounds) {
        add(bp.left.lo);
        add(bp.left.hi);
        add(bp.right.lo);
        add(bp.right.hi);
    }
    return Line(std::move(pts));
}

int Line::index_of(const Rational& x) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), x);
    if (it == points_.end() || *it != x) throw std::out_of_range("point " + x.str() + " is not an anchor of the line");
    return static_cast<int>(it - points_.begin());
}

int Line::lower_anchor(const ExtCoord& x) const {
    if (x.is_neg_inf()) return -1;
    if (x.is_pos_inf()) return size() + 1;
    return index_of(x.value());
}

int Line::upper_anchor(const ExtCoord& x) const {
    if (x.is_pos_inf()) return size();
    if (x.is_neg_inf()) return -2;
    return index_of(x.value());
}

std::vector<Rational> Line::materialize(std::span<const Position> positions) const {
    // max rank used per gap; slot 0 is the ray left of all anchors
    std::vector<std::int64_t> top(points_.size() + 1, 0);
    for (const auto& p : positions) {
        if (p.is_bottom()) throw std::invalid_argument("cannot materialize -infinity");
        auto& t = top[p.anchor + 1];
        t = std::max(t, p.rank);
    }
    std::vector<Rational> out;
    out.reserve(positions.size());
    for (const auto& p : positions) {
        if (p.anchor < 0) {
            if (points_.empty()) out.emplace_back(p.rank);
            else out.push_back(points_.front() - Rational(top[0] + 1 - p.rank));
            continue;
        }
        const Rational& base = points_[p.anchor];
        if (p.rank == 0) {
            out.push_back(base);
        } else if (p.anchor + 1 < size()) {
            const Rational width = points_[p.anchor + 1] - base;
            out.push_back(base + width * Rational(p.rank, top[p.anchor + 1] + 1));
        } else {
            out.push_back(base + Rational(p.rank));
        }
    }
    return out;
}

} // namespace boundrep
