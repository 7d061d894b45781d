#include "boundrep/render.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace boundrep {

namespace {

constexpr double kWidth = 800;
constexpr double kMargin = 40;
constexpr double kRow = 24;

double as_double(const Rational& r) { return static_cast<double>(r.num()) / static_cast<double>(r.den()); }

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    return buf;
}

} // namespace

std::string render_svg(const Instance& inst, const Representation& rep) {
    const int n = inst.n();
    if (static_cast<int>(rep.intervals.size()) != n)
        throw std::invalid_argument("representation has " + std::to_string(rep.intervals.size()) +
                                    " intervals, instance has " + std::to_string(n) + " vertices");

    double lo = 0, hi = 1;
    bool any = false;
    auto see = [&](double x) {
        lo = any ? std::min(lo, x) : x;
        hi = any ? std::max(hi, x) : x;
        any = true;
    };
    for (const auto& iv : rep.intervals) see(as_double(iv.lo)), see(as_double(iv.hi));
    for (const auto& b : inst.bounds)
        for (const Bound* s : {&b.left, &b.right})
            for (const ExtCoord* e : {&s->lo, &s->hi})
                if (e->finite()) see(as_double(e->value()));
    if (hi - lo < 1e-9) lo -= 0.5, hi += 0.5;

    const double scale = (kWidth - 2 * kMargin) / (hi - lo);
    auto x_of = [&](const ExtCoord& e) {
        if (e.is_neg_inf()) return kMargin / 2;
        if (e.is_pos_inf()) return kWidth - kMargin / 2;
        return kMargin + (as_double(e.value()) - lo) * scale;
    };
    const double height = 2 * kMargin + kRow * std::max(n, 1);

    std::string s;
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(kWidth) + "\" height=\"" + fmt(height) +
         "\" viewBox=\"0 0 " + fmt(kWidth) + " " + fmt(height) + "\">\n";
    s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (int v = 0; v < n; ++v) {
        const double y = kMargin + kRow * v + kRow / 2;
        const auto& b = inst.bounds[v];
        const auto& iv = rep.intervals[v];
        s += "<text x=\"4\" y=\"" + fmt(y + 4) + "\" font-size=\"11\" font-family=\"monospace\">" +
             std::to_string(v) + "</text>\n";
        // whiskers: left bound above the segment, right bound below
        s += "<line class=\"bound-left\" x1=\"" + fmt(x_of(b.left.lo)) + "\" y1=\"" + fmt(y - 6) + "\" x2=\"" +
             fmt(x_of(b.left.hi)) + "\" y2=\"" + fmt(y - 6) + "\" stroke=\"#2a7\" stroke-width=\"1.5\"/>\n";
        s += "<line class=\"bound-right\" x1=\"" + fmt(x_of(b.right.lo)) + "\" y1=\"" + fmt(y + 6) + "\" x2=\"" +
             fmt(x_of(b.right.hi)) + "\" y2=\"" + fmt(y + 6) + "\" stroke=\"#c52\" stroke-width=\"1.5\"/>\n";
        const double x1 = x_of(ExtCoord(iv.lo)), x2 = x_of(ExtCoord(iv.hi));
        s += "<line class=\"interval\" x1=\"" + fmt(x1) + "\" y1=\"" + fmt(y) + "\" x2=\"" + fmt(x2) + "\" y2=\"" +
             fmt(y) + "\" stroke=\"black\" stroke-width=\"4\" stroke-linecap=\"round\"/>\n";
    }
    s += "</svg>\n";
    return s;
}

} // namespace boundrep
