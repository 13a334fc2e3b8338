#include <doctest.h>

#include <string>

#include "ovalsets/errors.hpp"
#include "ovalsets/svg.hpp"

using namespace ovalsets;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
    return n;
}

}  // namespace

TEST_CASE("mixed-harmonic oval layers") {
    const OvalSpec o = validate_oval(TrigPoly(115.0, {{2, 10.0, 0.0}, {3, 1.0 / 3.0, 0.0}, {4, 0.0, 1.0}, {5, 0.0, -3.0}}));
    const auto layers = oval_layers(o, {"m", "wigner", "cwms", "sms"}, 512);
    REQUIRE(layers.size() == 4);
    CHECK(layers[1].cusps.size() == 5);
    CHECK(layers[2].cusps.size() == 4);
    CHECK(layers[3].cusps.size() == 10);
    const std::string svg = render_svg(layers);
    CHECK(count(svg, "<polyline") == 4);
    CHECK(count(svg, "class=\"cusp") == 19);
    CHECK(svg.rfind("</svg>") != std::string::npos);
    CHECK(count(svg, "<g") == count(svg, "</g>"));
}

TEST_CASE("point sets render as a single marker") {
    const auto layers = oval_layers(validate_oval(TrigPoly(5.0)), {"m", "sms"}, 64);
    REQUIRE(layers.size() == 2);
    CHECK(layers[1].polyline.empty());
    REQUIRE(layers[1].point.has_value());
    const std::string svg = render_svg(layers);
    CHECK(count(svg, "<polyline") == 1);
    CHECK(count(svg, "class=\"point") == 1);
    CHECK_THROWS_AS(oval_layers(validate_oval(TrigPoly(5.0)), {"evolute"}, 64), GeometryError);
}

TEST_CASE("parametric ellipse") {
    const ParametricCurve c(TrigPoly::cosine(1, 2.0), TrigPoly::sine(1, 1.0));
    const auto layers = parametric_layers(c, {"m", "sms"}, 256);
    const std::string svg = render_svg(layers);
    CHECK(count(svg, "<polyline") == 2);
    CHECK(count(svg, "class=\"cusp") == 4);
}

TEST_CASE("viewBox has a 5% margin and flips y") {
    SvgLayer l;
    l.name = "m";
    l.polyline = {{0, 0}, {10, 0}, {10, 20}, {0, 20}};
    const std::string svg = render_svg({l});
    CHECK(svg.find("viewBox=\"-0.5 -21 11 22\"") != std::string::npos);
    CHECK(svg.find("scale(1,-1)") != std::string::npos);
}
