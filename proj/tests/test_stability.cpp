#include <doctest.h>

#include <cmath>

#include "ovalsets/sampler.hpp"
#include "ovalsets/stability.hpp"

using namespace ovalsets;

TEST_CASE("Steiner symmetral and Wigner-type curve") {
    const OvalSpec o = validate_oval(TrigPoly(30.0, {{1, 1.0, 2.0}, {2, 1.0, 0.0}, {3, 0.0, 1.0}, {4, 0.5, 0.5}}));
    CHECK(steiner_symmetral(o) == TrigPoly(30.0, {{1, 1.0, 2.0}, {2, 1.0, 0.0}, {4, 0.5, 0.5}}));
    CHECK(wigner_type_curve(o).support() == TrigPoly(30.0, {{1, 1.0, 2.0}, {3, 0.0, 1.0}}));
    CHECK(deviation(TrigPoly(1.0), TrigPoly(1.0, {{2, 3.0, 0.0}}), Metric::Sup) == doctest::Approx(3.0));
    CHECK(deviation(TrigPoly(1.0), TrigPoly(1.0, {{2, 3.0, 0.0}}), Metric::L2) == doctest::Approx(3.0 * std::sqrt(kPi)));
}

TEST_CASE("equality witness for the L2 Wigner bound") {
    const StabilityReport r = stability_report(validate_oval(TrigPoly(20.0, {{2, 2.0, 0.0}})));
    CHECK(r.phi_wigner == doctest::Approx(24 * kPi * kPi));
    CHECK(r.phi_cwms == doctest::Approx(0.0).scale(r.length * r.length));
    CHECK(r.d_inf_W == doctest::Approx(2.0));
    CHECK(r.d_2_W == doctest::Approx(2.0 * std::sqrt(kPi)));
    REQUIRE(r.find("6.7") != nullptr);
    CHECK(std::abs(r.find("6.7")->slack) <= 1e-9 * r.length * r.length);
    CHECK(r.find("6.6")->slack > 0.0);
    CHECK(r.all_hold());
}

TEST_CASE("equality witness for the L2 symmetral bound") {
    const StabilityReport r = stability_report(validate_oval(TrigPoly(10.0, {{3, 1.0, 0.0}})));
    CHECK(r.constant_width);
    CHECK(r.phi_cwms == doctest::Approx(16 * kPi * kPi));
    CHECK(r.d_inf_S == doctest::Approx(1.0));
    REQUIRE(r.find("6.16") != nullptr);
    CHECK(std::abs(r.find("6.16")->slack) <= 1e-9 * r.length * r.length);
    CHECK(r.find("6.18") == nullptr);
    CHECK(r.all_hold());
}

TEST_CASE("circle: everything vanishes") {
    const StabilityReport r = stability_report(validate_oval(TrigPoly(3.0)));
    CHECK(r.phi_wigner == 0.0);
    CHECK(r.phi_cwms == 0.0);
    CHECK(r.d_inf_W == 0.0);
    CHECK(r.d_inf_S == 0.0);
    CHECK(r.all_hold());
}

TEST_CASE("bounds hold on random ovals") {
    OvalSampler rng(5);
    for (int i = 0; i < 100; ++i) {
        const StabilityReport r = stability_report(validate_oval(rng.next_support(6)));
        CHECK(r.all_hold());
        CHECK(r.phi_wigner == doctest::Approx(r.phi_wigner_geometric).scale(r.length * r.length).epsilon(1e-9));
        CHECK(r.phi_cwms == doctest::Approx(r.phi_cwms_geometric).scale(r.length * r.length).epsilon(1e-9));
    }
}
