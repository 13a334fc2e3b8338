#include <doctest.h>

#include <cmath>

#include "ovalsets/errors.hpp"
#include "ovalsets/general_curve.hpp"
#include "ovalsets/serialize.hpp"

using namespace ovalsets;

namespace {

ParametricCurve ellipse(double a, double b) { return ParametricCurve(TrigPoly::cosine(1, a), TrigPoly::sine(1, b)); }

ParametricCurve family(double alpha, double beta) {
    return ParametricCurve(TrigPoly(0.0, {{1, 1.0, 0.0}, {2, alpha, 0.0}}), TrigPoly(0.0, {{1, 0.0, 1.0}, {2, 0.0, beta}}));
}

}  // namespace

TEST_CASE("unit circle frame") {
    const ParametricCurve c = ellipse(1.0, 1.0);
    const FrenetFrame f = frenet(c, 0.0);
    CHECK(f.curvature == doctest::Approx(1.0));
    CHECK(f.speed == doctest::Approx(1.0));
    CHECK(f.tangent.y == doctest::Approx(1.0));
    CHECK(f.normal.x == doctest::Approx(-1.0));  // inward
    CHECK(c.min_speed() == doctest::Approx(1.0));
    const SmsParametricReport r = sms_parametric(c);
    CHECK(r.point_set);
    CHECK(r.singular_params.angles.empty());
    CHECK(r.sms_area == doctest::Approx(0.0).scale(1.0));
    CHECK(norm(sms_point(c, r.length, 1.0)) < 1e-12);
}

TEST_CASE("ellipse (2, 1)") {
    const ParametricCurve c = ellipse(2.0, 1.0);
    const double L = 9.688448220547675;  // complete elliptic integral, scipy
    CHECK(arc_length(c) == doctest::Approx(L).epsilon(1e-13));
    CHECK(enclosed_area(c) == doctest::Approx(2 * kPi).epsilon(1e-13));
    CHECK(is_simple(c));
    CHECK(is_convex(c));
    const SmsParametricReport r = sms_parametric(c, 16);
    CHECK(r.singular_params.angles.size() == 4);
    CHECK(r.sms_area == doctest::Approx(2 * kPi - L * L / (4 * kPi)).epsilon(1e-10));
    CHECK(r.equality_residual < 1e-10);
    CHECK_FALSE(r.point_set);
    CHECK_FALSE(r.constant_width_case);
    CHECK(r.sample_points.size() == 16);
}

TEST_CASE("orientation handling") {
    CHECK_THROWS_AS(ParametricCurve(TrigPoly::cosine(1, 2.0), TrigPoly::sine(1), -1), OrientationMismatch);
    const ParametricCurve cw(TrigPoly::cosine(1, 2.0), TrigPoly::sine(1, -1.0), -1);
    CHECK(cw.declared_orientation() == -1);
    CHECK(enclosed_area(cw) == doctest::Approx(2 * kPi));
    CHECK(arc_length(cw) == doctest::Approx(9.688448220547675));
}

TEST_CASE("curves with a stationary point are rejected") {
    // Astroid (cos^3 t, sin^3 t) stops at its four cusps.
    CHECK_THROWS_AS(ParametricCurve(TrigPoly(0.0, {{1, 0.75, 0.0}, {3, 0.25, 0.0}}),
                                    TrigPoly(0.0, {{1, 0.0, 0.75}, {3, 0.0, -0.25}})),
                    NotRegular);
}

TEST_CASE("limacon-like curve length") {
    const ParametricCurve c = family(0.2, 0.2);
    CHECK(arc_length(c) == doctest::Approx(6.537133349575565).epsilon(1e-12));
    CHECK(is_convex(c));
}

TEST_CASE("non-convex simple family members") {
    struct Case {
        double a, b, length;
        std::size_t singular;
    };
    // Lengths and counts from the dense-sample family scan (scipy quad, 2e5 nodes).
    for (const Case k : {Case{0.3, 0.1, 6.624671636603469, 6}, Case{0.35, 0.2, 6.845561649836162, 6},
                         Case{0.4, 0.3, 7.145293328463161, 6}, Case{0.3, 0.3, 6.862737420125466, 4}}) {
        const ParametricCurve c = family(k.a, k.b);
        CHECK(is_simple(c));
        CHECK_FALSE(is_convex(c));
        const SmsParametricReport r = sms_parametric(c);
        CHECK(r.length == doctest::Approx(k.length).epsilon(1e-10));
        CHECK(r.area == doctest::Approx(kPi * (1 + 2 * k.a * k.b)).epsilon(1e-12));
        CHECK(r.singular_params.angles.size() == k.singular);
        CHECK(r.sms_area == doctest::Approx(r.closed_form_sms_area).epsilon(1e-8));
    }
}

TEST_CASE("self-intersecting curve is detected") {
    // cos t + 0.6 cos 2t has a small inner loop.
    const ParametricCurve c(TrigPoly(0.0, {{1, 1.0, 0.0}, {2, 0.6, 0.0}}), TrigPoly(0.0, {{1, 0.0, 1.0}, {2, 0.0, 0.6}}));
    CHECK_FALSE(is_simple(c));
}

TEST_CASE("designed curve with two SMS singular points") {
    const CurveSpec spec = load_curve_spec(OVALSETS_SOURCE_DIR "/data/curves/two_singularity_curve.json");
    const ParametricCurve c(spec.x, spec.y, spec.orientation);
    CHECK(is_simple(c, 4096));
    CHECK_FALSE(is_convex(c));
    const SmsParametricReport r = sms_parametric(c);
    CHECK(r.singular_params.angles.size() == 2);
    CHECK(r.singular_params.generic());
    // Golden values from the independent numpy analysis (4e4 samples).
    CHECK(r.length == doctest::Approx(6.2831888567032985).epsilon(1e-8));
    CHECK(r.area == doctest::Approx(1.6381307772920377).epsilon(1e-8));
    CHECK(r.sms_area == doctest::Approx(-1.5034654258224698).epsilon(1e-8));
    CHECK(r.sms_area == doctest::Approx(r.closed_form_sms_area).epsilon(1e-8));
}
