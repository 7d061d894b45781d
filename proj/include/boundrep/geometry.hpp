#ifndef BOUNDREP_GEOMETRY_HPP
#define BOUNDREP_GEOMETRY_HPP

#include "boundrep/rational.hpp"

#include <compare>
#include <string>
#include <string_view>

namespace boundrep {

/// A point of the extended line: a finite rational or one of the two infinities.
class ExtCoord {
public:
    enum class Kind : int { NegInf = -1, Finite = 0, PosInf = 1 };

    ExtCoord() = default;
    ExtCoord(Rational value) : value_(value) {}
    ExtCoord(std::int64_t value) : value_(value) {}

    static ExtCoord neg_inf() { return ExtCoord(Kind::NegInf); }
    static ExtCoord pos_inf() { return ExtCoord(Kind::PosInf); }

    /// "-inf", "+inf" (also "inf"), or a rational.
    static ExtCoord parse(std::string_view text);

    Kind kind() const { return kind_; }
    bool finite() const { return kind_ == Kind::Finite; }
    bool is_neg_inf() const { return kind_ == Kind::NegInf; }
    bool is_pos_inf() const { return kind_ == Kind::PosInf; }
    /// Precondition: finite().
    const Rational& value() const { return value_; }

    std::string str() const;

    friend bool operator==(const ExtCoord& a, const ExtCoord& b) {
        return a.kind_ == b.kind_ && (a.kind_ != Kind::Finite || a.value_ == b.value_);
    }
    friend std::strong_ordering operator<=>(const ExtCoord& a, const ExtCoord& b) {
        if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
        if (a.kind_ != Kind::Finite) return std::strong_ordering::equal;
        return a.value_ <=> b.value_;
    }

private:
    explicit ExtCoord(Kind k) : kind_(k) {}

    Kind kind_ = Kind::Finite;
    Rational value_;
};

/// Closed interval with finite endpoints; lo == hi is a trivial (single point) interval.
struct Interval {
    Rational lo;
    Rational hi;

    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    bool intersects(const Interval& o) const { return lo <= o.hi && o.lo <= hi; }
    bool subset_of(const Interval& o) const { return o.lo <= lo && hi <= o.hi; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Closed interval of the extended line used as a left or right bound.
/// An infinite end means the bound is unbounded on that side.
struct Bound {
    ExtCoord lo = ExtCoord::neg_inf();
    ExtCoord hi = ExtCoord::pos_inf();

    Bound() = default;
    Bound(ExtCoord l, ExtCoord h) : lo(l), hi(h) {}
    Bound(const Interval& i) : lo(i.lo), hi(i.hi) {}

    static Bound unbounded() { return {}; }
    static Bound point(const Rational& x) { return {x, x}; }

    bool empty() const { return hi < lo; }
    bool contains(const Rational& x) const { return lo <= ExtCoord(x) && ExtCoord(x) <= hi; }
    bool unbounded_both() const { return lo.is_neg_inf() && hi.is_pos_inf(); }

    friend bool operator==(const Bound&, const Bound&) = default;
};

Bound intersect(const Bound& a, const Bound& b);

/// Subset ordering: a lies completely left of b, i.e. r(a) <= l(b).
inline bool subset_before(const Bound& a, const Bound& b) {
    return a.hi <= b.lo;
}

} // namespace boundrep

#endif
