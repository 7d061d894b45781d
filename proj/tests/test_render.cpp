#include "doctest.h"

#include "boundrep/generators.hpp"
#include "boundrep/render.hpp"
#include "boundrep/solve.hpp"

#include <stdexcept>

using namespace boundrep;

namespace {

int count(const std::string& s, const std::string& needle) {
    int c = 0;
    for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++c;
    return c;
}

} // namespace

TEST_CASE("one segment per interval, deterministic") {
    const Instance inst = generate({GenKind::RandomInterval, 25, 3, true, GraphClass::Interval});
    const SolveResult r = solve(inst);
    REQUIRE(r.sat());
    const std::string a = render_svg(inst, *r.representation);
    CHECK(a == render_svg(inst, *r.representation));
    CHECK(count(a, "class=\"interval\"") == 25);
    CHECK(count(a, "class=\"bound-left\"") == 25);
    CHECK(count(a, "class=\"bound-right\"") == 25);
    CHECK(a.rfind("<svg", 0) == 0);
    CHECK(a.find("</svg>") != std::string::npos);
}

TEST_CASE("size mismatch") {
    const Instance inst = Instance::unbounded(Graph(2, {}));
    Representation rep{{{Rational(0), Rational(1)}}};
    CHECK_THROWS_AS(render_svg(inst, rep), std::invalid_argument);
}

TEST_CASE("all points equal") {
    const Instance inst = Instance::unbounded(Graph(1, {}));
    const std::string s = render_svg(inst, Representation{{{Rational(3), Rational(3)}}});
    CHECK(s.find("nan") == std::string::npos);
    CHECK(count(s, "class=\"interval\"") == 1);
}
