#include "boundrep/geometry.hpp"

#include <algorithm>

namespace boundrep {

ExtCoord ExtCoord::parse(std::string_view text) {
    if (text == "-inf") return neg_inf();
    if (text == "+inf" || text == "inf") return pos_inf();
    return ExtCoord(Rational::parse(text));
}

std::string ExtCoord::str() const {
    switch (kind_) {
    case Kind::NegInf: return "-inf";
    case Kind::PosInf: return "+inf";
    case Kind::Finite: break;
    }
    return value_.str();
}

Bound intersect(const Bound& a, const Bound& b) {
    return {std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
}

} // namespace boundrep
