#include "ovalsets/fuzz.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <optional>
#include <thread>

#include "ovalsets/derived.hpp"
#include "ovalsets/errors.hpp"
#include "ovalsets/general_curve.hpp"
#include "ovalsets/oval.hpp"
#include "ovalsets/sampler.hpp"
#include "ovalsets/stability.hpp"

namespace ovalsets {

namespace {

std::string fmt(const char* what, double a, double b) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s: %.17g vs %.17g", what, a, b);
    return buf;
}

bool close_rel(double a, double b, double rel, double floor) {
    return std::abs(a - b) <= rel * std::max({std::abs(a), std::abs(b), floor});
}

}  // namespace

OvalCheck check_oval(const TrigPoly& p, bool parametric_cross_check) {
    OvalCheck out;
    auto fail = [&out](std::string msg) { out.failures.push_back(std::move(msg)); };

    std::optional<OvalSpec> o;
    try {
        o.emplace(validate_oval(p));
    } catch (const NotAnOval& e) {
        fail(e.what());
        return out;
    }
    const double L = o->length();
    const double L2 = L * L;

    const OvalSummary s = geometry_summary(*o);
    if (!close_rel(s.length, s.length_quadrature, 1e-9, 0.0)) fail(fmt("length coefficient/quadrature", s.length, s.length_quadrature));
    if (!close_rel(s.area, s.area_quadrature, 1e-9, 0.0)) fail(fmt("area coefficient/quadrature", s.area, s.area_quadrature));
    if (!s.vertex_angles.generic()) out.generic = false;

    const IdentityReport ids = verify_identities(*o);
    for (const auto& c : ids.checks) {
        if (!c.passed()) fail(fmt(("identity " + c.id).c_str(), c.lhs, c.rhs));
    }

    const StabilityReport st = stability_report(*o);
    for (const auto& b : st.bound_slacks) {
        if (b.slack < -1e-9 * L2) fail(fmt(("bound " + b.id).c_str(), b.lhs, b.rhs));
    }
    if (st.phi_wigner < -1e-9 * L2) fail(fmt("phi_wigner >= 0", st.phi_wigner, 0.0));
    if (st.phi_cwms < -1e-9 * L2) fail(fmt("phi_cwms >= 0", st.phi_cwms, 0.0));
    if (std::abs(st.phi_wigner - st.phi_wigner_geometric) > 1e-9 * L2) {
        fail(fmt("phi_wigner spectral/geometric", st.phi_wigner, st.phi_wigner_geometric));
    }
    if (std::abs(st.phi_cwms - st.phi_cwms_geometric) > 1e-9 * L2) {
        fail(fmt("phi_cwms spectral/geometric", st.phi_cwms, st.phi_cwms_geometric));
    }

    // Cusp parities; degenerate sets (point) only arise on special classes.
    const bool cw = s.is_constant_width;
    const bool cs = s.is_centrally_symmetric;
    struct Want {
        DerivedKind kind;
        bool degenerate;
    };
    const Want wants[] = {{DerivedKind::wigner(), cs}, {DerivedKind::cwms(), cw}, {DerivedKind::sms(), false}};
    int counts[3] = {0, 0, 0};
    bool have[3] = {false, false, false};
    for (int k = 0; k < 3; ++k) {
        try {
            const DerivedSetReport r = derived_report(*o, wants[k].kind);
            if (!r.cusp_angles.generic()) out.generic = false;
            if (!close_rel(r.oriented_area, r.oriented_area_quadrature, 1e-9, 1e-300) &&
                std::abs(r.oriented_area - r.oriented_area_quadrature) > 1e-12 * L2) {
                fail(fmt((r.kind.name() + " area coefficient/quadrature").c_str(), r.oriented_area,
                         r.oriented_area_quadrature));
            }
            counts[k] = r.cusp_count;
            have[k] = true;
        } catch (const PointSet&) {
            if (!wants[k].degenerate) fail(wants[k].kind.name() + " unexpectedly degenerates to a point");
        }
    }
    if (out.generic) {
        if (!s.vertices_degenerate && s.vertex_angles.angles.size() < 4) {
            fail(fmt("vertex count >= 4", static_cast<double>(s.vertex_angles.angles.size()), 4));
        }
        if (have[0] && (counts[0] < 3 || counts[0] % 2 == 0)) fail(fmt("wigner cusps odd >= 3", counts[0], 3));
        if (have[1] && (counts[1] <= 0 || counts[1] % 4 != 0)) fail(fmt("cwms cusps multiple of 4", counts[1], 4));
        if (have[2] && !cw && (counts[2] < 4 || counts[2] % 2 != 0)) fail(fmt("sms cusps even >= 4", counts[2], 4));
    }

    if (parametric_cross_check) {
        try {
            const auto [x, y] = curve_coordinates(p);
            const ParametricCurve c(x, y, 1);
            const SmsParametricReport r = sms_parametric(c, 0);
            if (!close_rel(r.length, L, 1e-9, 0.0)) fail(fmt("parametric length", r.length, L));
            if (!close_rel(r.area, s.area, 1e-8, 0.0)) fail(fmt("parametric area", r.area, s.area));
            if (std::abs(r.sms_area - r.closed_form_sms_area) > 1e-8 * std::max(std::abs(r.closed_form_sms_area), 1e-9 * L2)) {
                fail(fmt("parametric sms area", r.sms_area, r.closed_form_sms_area));
            }
        } catch (const GeometryError& e) {
            // A corner (rho = 0) is impossible for a validated oval, so this is a real failure.
            fail(std::string("parametric path: ") + e.what());
        }
    }
    return out;
}

FuzzSummary run_fuzz(std::uint64_t seed, std::size_t count, int degree) {
    FuzzSummary sum;
    sum.seed = seed;
    sum.count = count;
    sum.degree = degree;

    // Draw sequentially so the inputs never depend on scheduling.
    OvalSampler sampler(seed);
    std::vector<TrigPoly> inputs;
    inputs.reserve(count);
    for (std::size_t i = 0; i < count; ++i) inputs.push_back(sampler.next_support(degree));

    std::vector<OvalCheck> results(count);
    const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), 16));
    std::vector<std::future<void>> jobs;
    for (std::size_t w = 0; w < workers; ++w) {
        jobs.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t i = w; i < count; i += workers) results[i] = check_oval(inputs[i]);
        }));
    }
    for (auto& j : jobs) j.get();

    for (std::size_t i = 0; i < count; ++i) {
        if (!results[i].generic) ++sum.non_generic;
        if (results[i].passed()) {
            ++sum.passed;
        } else {
            ++sum.failed;
            sum.failures.push_back({i, inputs[i], results[i].failures});
        }
    }
    return sum;
}

}  // namespace ovalsets
