#include "ovalsets/general_curve.hpp"

#include <algorithm>
#include <cmath>

#include "ovalsets/errors.hpp"

namespace ovalsets {

namespace {

// Minimum of f over one period: uniform grid plus golden refinement around the best sample.
double periodic_minimum(const std::function<double(double)>& f, std::size_t n) {
    const double h = kTwoPi / static_cast<double>(n);
    std::size_t best = 0;
    double best_v = f(0.0);
    for (std::size_t i = 1; i < n; ++i) {
        const double v = f(h * static_cast<double>(i));
        if (v < best_v) {
            best_v = v;
            best = i;
        }
    }
    const double c = h * static_cast<double>(best);
    const double t = golden_minimize(f, c - h, c + h);
    return std::min(best_v, f(t));
}

double cross_sign(double ax, double ay, double bx, double by, double cx, double cy) {
    return (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
}

bool segments_cross(const Vec2& p1, const Vec2& p2, const Vec2& q1, const Vec2& q2) {
    const double d1 = cross_sign(q1.x, q1.y, q2.x, q2.y, p1.x, p1.y);
    const double d2 = cross_sign(q1.x, q1.y, q2.x, q2.y, p2.x, p2.y);
    const double d3 = cross_sign(p1.x, p1.y, p2.x, p2.y, q1.x, q1.y);
    const double d4 = cross_sign(p1.x, p1.y, p2.x, p2.y, q2.x, q2.y);
    return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0)) && d1 != 0 && d2 != 0 && d3 != 0 && d4 != 0;
}

double curve_scale(const ParametricCurve& c) { return 1.0 + c.x().coefficient_l1() + c.y().coefficient_l1(); }

}  // namespace

ParametricCurve::ParametricCurve(TrigPoly x, TrigPoly y, int orientation) : declared_orientation_(orientation) {
    if (orientation != 1 && orientation != -1) throw GeometryError("orientation must be +1 or -1");
    if (orientation == -1) {
        x_ = reflect_parameter(x);
        y_ = reflect_parameter(y);
    } else {
        x_ = std::move(x);
        y_ = std::move(y);
    }

    const std::size_t n = isolation_grid_size(degree());
    const double min_sq = periodic_minimum(
        [this](double t) {
            const Vec2 v = velocity(t);
            return dot(v, v);
        },
        n);
    min_speed_ = std::sqrt(std::max(min_sq, 0.0));
    if (!(min_speed_ >= regularity_threshold())) throw NotRegular(min_speed_);

    if (!(enclosed_area(*this) > 0.0)) {
        throw OrientationMismatch("declared orientation disagrees with the sign of the enclosed area");
    }
}

int ParametricCurve::degree() const noexcept { return std::max(x_.degree(), y_.degree()); }

double ParametricCurve::regularity_threshold() const noexcept {
    return 1e-8 * (1.0 + std::max(x_.coefficient_max(), y_.coefficient_max()));
}

FrenetFrame frenet(const ParametricCurve& c, double t) {
    const Vec2 v = c.velocity(t);
    const Vec2 a = c.acceleration(t);
    FrenetFrame f;
    f.speed = norm(v);
    f.tangent = (1.0 / f.speed) * v;
    f.normal = perp(f.tangent);
    f.curvature = cross(v, a) / (f.speed * f.speed * f.speed);
    return f;
}

std::size_t initial_quadrature_nodes(int degree) noexcept { return 64 * static_cast<std::size_t>(degree + 1); }

double arc_length(const ParametricCurve& c) {
    return adaptive_periodic_quadrature([&c](double t) { return norm(c.velocity(t)); },
                                        initial_quadrature_nodes(c.degree()))
        .value;
}

double enclosed_area(const ParametricCurve& c) {
    const double scale = curve_scale(c);
    return adaptive_periodic_quadrature(
               [&c](double t) { return 0.5 * cross(c.point(t), c.velocity(t)); },
               initial_quadrature_nodes(c.degree()), 1e-12, std::size_t{1} << 20, scale * scale)
        .value;
}

bool is_simple(const ParametricCurve& c, std::size_t samples) {
    const std::size_t n = std::max<std::size_t>(samples, 8);
    std::vector<Vec2> pts(n);
    const double h = kTwoPi / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) pts[i] = c.point(h * static_cast<double>(i));

    struct Box {
        double x0, x1, y0, y1;
    };
    std::vector<Box> boxes(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& a = pts[i];
        const Vec2& b = pts[(i + 1) % n];
        boxes[i] = {std::min(a.x, b.x), std::max(a.x, b.x), std::min(a.y, b.y), std::max(a.y, b.y)};
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1) continue;  // adjacent through the seam
            const Box& bi = boxes[i];
            const Box& bj = boxes[j];
            if (bi.x1 < bj.x0 || bj.x1 < bi.x0 || bi.y1 < bj.y0 || bj.y1 < bi.y0) continue;
            if (segments_cross(pts[i], pts[(i + 1) % n], pts[j], pts[(j + 1) % n])) return false;
        }
    }
    return true;
}

bool is_convex(const ParametricCurve& c) {
    const double m = periodic_minimum([&c](double t) { return cross(c.velocity(t), c.acceleration(t)); },
                                      isolation_grid_size(c.degree()));
    const double s = curve_scale(c);
    return m >= -kValueTolerance * s * s;
}

double relative_width_spread(const ParametricCurve& c, std::size_t directions) {
    const std::size_t n = 4 * isolation_grid_size(c.degree());
    const double h = kTwoPi / static_cast<double>(n);
    std::vector<Vec2> pts(n);
    for (std::size_t i = 0; i < n; ++i) pts[i] = c.point(h * static_cast<double>(i));

    auto support = [&](const Vec2& u) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < n; ++i) {
            if (dot(pts[i], u) > dot(pts[best], u)) best = i;
        }
        const double t0 = h * static_cast<double>(best);
        const double t = golden_minimize([&](double s) { return -dot(c.point(s), u); }, t0 - h, t0 + h);
        return std::max(dot(c.point(t), u), dot(pts[best], u));
    };

    double wmin = 0.0;
    double wmax = 0.0;
    for (std::size_t k = 0; k < directions; ++k) {
        const double phi = kPi * static_cast<double>(k) / static_cast<double>(directions);
        const Vec2 u{std::cos(phi), std::sin(phi)};
        const double w = support(u) + support(-1.0 * u);
        if (k == 0) {
            wmin = wmax = w;
        } else {
            wmin = std::min(wmin, w);
            wmax = std::max(wmax, w);
        }
    }
    const double avg = arc_length(c) / kPi;
    return (wmax - wmin) / avg;
}

Vec2 sms_point(const ParametricCurve& c, double length, double t) {
    const FrenetFrame f = frenet(c, t);
    return c.point(t) + (length / kTwoPi) * f.normal;
}

SmsParametricReport sms_parametric(const ParametricCurve& c, std::size_t samples) {
    SmsParametricReport r;
    const double L = arc_length(c);
    const double A = enclosed_area(c);
    const double offset = L / kTwoPi;
    r.length = L;
    r.area = A;

    // Green's theorem over the offset, with its exact derivative (1 - offset * kappa) * speed * T.
    r.sms_area = adaptive_periodic_quadrature(
                     [&](double t) {
                         const FrenetFrame f = frenet(c, t);
                         const Vec2 s = c.point(t) + offset * f.normal;
                         const Vec2 ds = ((1.0 - offset * f.curvature) * f.speed) * f.tangent;
                         return 0.5 * cross(s, ds);
                     },
                     initial_quadrature_nodes(c.degree()), 1e-12, std::size_t{1} << 20, L * L)
                     .value;
    r.closed_form_sms_area = A - L * L / (4.0 * kPi);

    const std::size_t grid = std::max<std::size_t>(2048, 512 * static_cast<std::size_t>(c.degree()));
    const auto g = [&](double t) { return kTwoPi - L * frenet(c, t).curvature; };
    const double eps = kValueTolerance * (1.0 + kTwoPi);
    // A circle has L kappa = 2 pi everywhere: the offset is its centre and has no isolated singular points.
    double g_max = 0.0;
    for (std::size_t i = 0; i < grid; ++i) {
        g_max = std::max(g_max, std::abs(g(kTwoPi * static_cast<double>(i) / static_cast<double>(grid))));
    }
    r.point_set = g_max <= 1e-8 * kTwoPi;
    if (!r.point_set) r.singular_params = sign_changes(g, grid, eps);

    const double L2 = L * L;
    r.equality_residual = std::abs(L2 - 4.0 * kPi * A - 4.0 * kPi * std::abs(r.sms_area)) / L2;

    const bool double_cover = is_convex(c) && relative_width_spread(c) <= 1e-8;
    r.geometric_sms_area = double_cover ? 0.5 * r.sms_area : r.sms_area;
    r.residual_double_cover = std::abs(L2 - 4.0 * kPi * A - 8.0 * kPi * std::abs(r.geometric_sms_area)) / L2;
    const double residual_single_geo = std::abs(L2 - 4.0 * kPi * A - 4.0 * kPi * std::abs(r.geometric_sms_area)) / L2;
    r.constant_width_case = r.residual_double_cover <= 1e-8 && residual_single_geo > 1e-8;

    const std::size_t m = std::max<std::size_t>(samples, 1);
    r.sample_points.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        const double t = kTwoPi * static_cast<double>(i) / static_cast<double>(m);
        r.sample_points.push_back({t, c.point(t), sms_point(c, L, t)});
    }
    return r;
}

}  // namespace ovalsets
