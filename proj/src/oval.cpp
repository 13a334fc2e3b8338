#include "ovalsets/oval.hpp"

#include <cmath>

#include "ovalsets/errors.hpp"

namespace ovalsets {

namespace {

// Enough trapezoid nodes to integrate a product of two degree-d series exactly.
std::size_t exact_nodes(int degree) { return 4 * static_cast<std::size_t>(degree + 1) + 16; }

bool harmonics_below(const TrigPoly& p, double tol, bool even) {
    for (const auto& h : p.terms()) {
        if (h.n < 2) continue;
        if ((h.n % 2 == 0) != even) continue;
        if (std::abs(h.a) > tol || std::abs(h.b) > tol) return false;
    }
    return true;
}

}  // namespace

double OvalSpec::classification_tolerance() const noexcept { return 1e-9 * (1.0 + std::abs(p_.a0())); }

OvalSpec validate_oval(const TrigPoly& p) {
    const TrigPoly rho = p + derivative(p, 2);
    const double rho_min = extrema(rho).min;
    if (!(rho_min > 0.0)) throw NotAnOval(rho_min);
    return OvalSpec(p, rho_min);
}

Vec2 curve_point(const OvalSpec& o, double theta) {
    const TrigPoly& p = o.support();
    const double v = p(theta);
    const double dv = p.eval(theta, 1);
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return {v * c - dv * s, v * s + dv * c};
}

std::pair<TrigPoly, TrigPoly> curve_coordinates(const TrigPoly& p) {
    const TrigPoly dp = derivative(p);
    const TrigPoly c = TrigPoly::cosine(1);
    const TrigPoly s = TrigPoly::sine(1);
    return {multiply(p, c) - multiply(dp, s), multiply(p, s) + multiply(dp, c)};
}

bool is_constant_width(const OvalSpec& o) {
    return harmonics_below(o.support(), o.classification_tolerance(), true);
}

bool is_centrally_symmetric(const OvalSpec& o) {
    return harmonics_below(o.support(), o.classification_tolerance(), false);
}

OvalSummary geometry_summary(const OvalSpec& o) {
    const TrigPoly& p = o.support();
    const TrigPoly dp = derivative(p);
    const TrigPoly rho = o.radius_of_curvature();
    const std::size_t nodes = exact_nodes(p.degree());

    OvalSummary s;
    s.length = o.length();
    s.length_quadrature = periodic_trapezoid([&](double t) { return rho(t); }, nodes);

    double spectral = 0.0;
    for (const auto& h : p.terms()) {
        const double n2 = static_cast<double>(h.n) * h.n;
        spectral += (n2 - 1.0) * (h.a * h.a + h.b * h.b);
    }
    s.area = kPi * p.a0() * p.a0() - 0.5 * kPi * spectral;
    s.area_quadrature = 0.5 * periodic_trapezoid(
                                  [&](double t) {
                                      const double v = p(t);
                                      const double d = dp(t);
                                      return v * v - d * d;
                                  },
                                  nodes);

    s.avg_width = s.length / kPi;
    const Extrema w = extrema(p + antipodal_shift(p));
    s.width_min = w.min;
    s.width_max = w.max;
    s.is_constant_width = is_constant_width(o);
    s.is_centrally_symmetric = is_centrally_symmetric(o);

    const TrigPoly drho = derivative(rho);
    if (drho.is_zero(1e-15)) {
        s.vertices_degenerate = true;
    } else {
        s.vertex_angles = sign_changes(drho);
    }
    s.steiner = {p.cos_coef(1), p.sin_coef(1)};
    return s;
}

}  // namespace ovalsets
