#pragma once

#include <cstddef>
#include <vector>

#include "ovalsets/roots.hpp"
#include "ovalsets/trigpoly.hpp"
#include "ovalsets/vec2.hpp"

namespace ovalsets {

/// Closed regular curve t -> (x(t), y(t)) with trigonometric-polynomial coordinates.
///
/// Curves declared with orientation -1 are stored reparameterised by t -> -t,
/// so everything downstream sees a positively oriented curve. Simplicity is not
/// certified; see is_simple().
class ParametricCurve {
public:
    /// Throws NotRegular when the speed dips below regularity_threshold(), and
    /// OrientationMismatch when the enclosed area disagrees with the declared orientation.
    ParametricCurve(TrigPoly x, TrigPoly y, int orientation = 1);

    const TrigPoly& x() const noexcept { return x_; }
    const TrigPoly& y() const noexcept { return y_; }
    /// Orientation as declared by the caller.
    int declared_orientation() const noexcept { return declared_orientation_; }
    int degree() const noexcept;
    double min_speed() const noexcept { return min_speed_; }
    /// 1e-8 (1 + largest coefficient).
    double regularity_threshold() const noexcept;

    Vec2 point(double t) const noexcept { return {x_(t), y_(t)}; }
    Vec2 velocity(double t) const noexcept { return {x_.eval(t, 1), y_.eval(t, 1)}; }
    Vec2 acceleration(double t) const noexcept { return {x_.eval(t, 2), y_.eval(t, 2)}; }

private:
    TrigPoly x_;
    TrigPoly y_;
    int declared_orientation_ = 1;
    double min_speed_ = 0.0;
};

struct FrenetFrame {
    Vec2 tangent;
    Vec2 normal;  ///< tangent rotated by +pi/2
    double curvature = 0.0;
    double speed = 0.0;
};

FrenetFrame frenet(const ParametricCurve& c, double t);

/// Quadrature nodes to start from for a curve of the given degree.
std::size_t initial_quadrature_nodes(int degree) noexcept;

double arc_length(const ParametricCurve& c);
/// Signed area by Green's theorem.
double enclosed_area(const ParametricCurve& c);

/// Polyline spot check for self-intersections (O(N^2) segment test).
bool is_simple(const ParametricCurve& c, std::size_t samples = 2048);

/// Curvature never negative (up to the value tolerance).
bool is_convex(const ParametricCurve& c);

/// Estimated spread of the width function (max - min), relative to L / pi.
/// Meaningful for convex curves only.
double relative_width_spread(const ParametricCurve& c, std::size_t directions = 256);

struct SmsSample {
    double t = 0.0;
    Vec2 curve;
    Vec2 sms;
};

struct SmsParametricReport {
    double length = 0.0;
    double area = 0.0;
    double sms_area = 0.0;  ///< Green's area of the offset over the full parameter period
    double closed_form_sms_area = 0.0;  ///< A - L^2 / (4 pi)
    RootList singular_params;
    bool point_set = false;  ///< L kappa = 2 pi identically (circle): the offset is a single point
    double equality_residual = 0.0;  ///< |L^2 - 4 pi A - 4 pi |A_sms|| / L^2
    bool constant_width_case = false;
    double geometric_sms_area = 0.0;  ///< half of sms_area when the offset is traced twice
    double residual_double_cover = 0.0;  ///< |L^2 - 4 pi A - 8 pi |geometric area|| / L^2
    std::vector<SmsSample> sample_points;
};

/// Point of the offset at level L / (2 pi).
Vec2 sms_point(const ParametricCurve& c, double length, double t);

SmsParametricReport sms_parametric(const ParametricCurve& c, std::size_t samples = 64);

}  // namespace ovalsets
