#include "ovalsets/stability.hpp"

#include <algorithm>
#include <cmath>

#include "ovalsets/derived.hpp"
#include "ovalsets/errors.hpp"
#include "ovalsets/roots.hpp"

namespace ovalsets {

namespace {

// 2 pi^2 sum (n^2 - 1)(a_n^2 + b_n^2) over the harmonics with the requested parity, n >= 2.
double spectral_residual(const TrigPoly& p, bool even) {
    double s = 0.0;
    for (const auto& h : p.terms()) {
        if (h.n < 2 || (h.n % 2 == 0) != even) continue;
        const double n2 = static_cast<double>(h.n) * h.n;
        s += (n2 - 1.0) * (h.a * h.a + h.b * h.b);
    }
    return 2.0 * kPi * kPi * s;
}

double geometric_area(const OvalSpec& o, const DerivedKind& k) {
    try {
        return derived_report(o, k).oriented_area;
    } catch (const PointSet&) {
        return 0.0;
    }
}

}  // namespace

TrigPoly steiner_symmetral(const OvalSpec& o) {
    return filter_harmonics(o.support(), true, [](int n) { return n == 1 || n % 2 == 0; });
}

OvalSpec wigner_type_curve(const OvalSpec& o) {
    const TrigPoly& p = o.support();
    return validate_oval(TrigPoly::constant(p.a0()) + parity_parts(p).odd);
}

double deviation(const TrigPoly& pk, const TrigPoly& pn, Metric metric) {
    const TrigPoly diff = pk - pn;
    return metric == Metric::Sup ? sup_abs(diff) : std::sqrt(l2_norm_sq(diff));
}

const BoundSlack* StabilityReport::find(const std::string& id) const {
    auto it = std::find_if(bound_slacks.begin(), bound_slacks.end(), [&](const BoundSlack& b) { return b.id == id; });
    return it == bound_slacks.end() ? nullptr : &*it;
}

bool StabilityReport::all_hold(double rel_tol) const {
    const double tol = rel_tol * length * length;
    if (phi_wigner < -tol || phi_cwms < -tol) return false;
    if (std::abs(phi_wigner - phi_wigner_geometric) > tol || std::abs(phi_cwms - phi_cwms_geometric) > tol) return false;
    return std::all_of(bound_slacks.begin(), bound_slacks.end(), [tol](const BoundSlack& b) { return b.slack >= -tol; });
}

StabilityReport stability_report(const OvalSpec& o) {
    const TrigPoly& p = o.support();
    const OvalSummary summary = geometry_summary(o);
    const double L = summary.length;
    const double A = summary.area;
    const double area_w = std::abs(geometric_area(o, DerivedKind::wigner()));
    const double area_c = std::abs(geometric_area(o, DerivedKind::cwms()));
    const double area_s = std::abs(geometric_area(o, DerivedKind::sms()));

    StabilityReport r;
    r.length = L;
    r.constant_width = summary.is_constant_width;
    r.steiner = summary.steiner;
    r.phi_wigner = spectral_residual(p, true);
    r.phi_cwms = spectral_residual(p, false);
    r.phi_wigner_geometric = L * L - 4.0 * kPi * A - 8.0 * kPi * area_w;
    r.phi_cwms_geometric = L * L - 4.0 * kPi * A - kPi * area_c;

    const TrigPoly w = wigner_type_curve(o).support();
    const TrigPoly s = steiner_symmetral(o);
    r.d_inf_W = deviation(p, w, Metric::Sup);
    r.d_2_W = deviation(p, w, Metric::L2);
    r.d_inf_S = deviation(p, s, Metric::Sup);
    r.d_2_S = deviation(p, s, Metric::L2);

    const double pi2 = kPi * kPi;
    const double dW2 = r.d_inf_W * r.d_inf_W;
    const double lW2 = r.d_2_W * r.d_2_W;
    const double dS2 = r.d_inf_S * r.d_inf_S;
    const double lS2 = r.d_2_S * r.d_2_S;

    auto add = [&](std::string id, std::string text, double lhs, double rhs) {
        r.bound_slacks.push_back({std::move(id), std::move(text), lhs, rhs, lhs - rhs});
    };
    add("6.6", "phi_wigner >= 4 pi^2 d_inf(K, W_K)^2", r.phi_wigner, 4.0 * pi2 * dW2);
    add("6.7", "phi_wigner >= 6 pi d_2(K, W_K)^2", r.phi_wigner, 6.0 * kPi * lW2);
    add("6.8", "|A_cwms| >= max{4 pi d_inf(K, W_K)^2, 6 d_2(K, W_K)^2}", area_c,
        std::max(4.0 * kPi * dW2, 6.0 * lW2));
    add("6.14", "phi_cwms >= 8 pi^2 d_inf(K, S_K)^2", r.phi_cwms, 8.0 * pi2 * dS2);
    add("6.16", "phi_cwms >= 16 pi d_2(K, S_K)^2", r.phi_cwms, 16.0 * kPi * lS2);
    add("6.17", "|A_wigner| >= max{pi d_inf(K, S_K)^2, 2 d_2(K, S_K)^2}", area_w, std::max(kPi * dS2, 2.0 * lS2));
    if (!r.constant_width) {
        const double bound = std::max({2.0 * kPi * dS2 + kPi * dW2, 2.0 * kPi * dS2 + 1.5 * lW2,
                                       4.0 * lS2 + kPi * dW2, 4.0 * lS2 + 1.5 * lW2});
        add("6.18", "|A_sms| >= combined Steiner / Wigner-type deviation bound", area_s, bound);
    }
    return r;
}

}  // namespace ovalsets
