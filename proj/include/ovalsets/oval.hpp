#pragma once

#include <utility>

#include "ovalsets/roots.hpp"
#include "ovalsets/trigpoly.hpp"
#include "ovalsets/vec2.hpp"

namespace ovalsets {

/// A support function certified to describe an oval (radius of curvature p + p'' > 0).
///
/// Only validate_oval() produces instances, so holding an OvalSpec is proof of
/// convexity.
class OvalSpec {
public:
    const TrigPoly& support() const noexcept { return p_; }
    /// Certified global minimum of p + p''.
    double rho_min() const noexcept { return rho_min_; }

    /// Radius of curvature as a series: p + p''.
    TrigPoly radius_of_curvature() const { return p_ + derivative(p_, 2); }

    double length() const noexcept { return kTwoPi * p_.a0(); }
    double average_width() const noexcept { return 2.0 * p_.a0(); }

    /// Classification threshold: 1e-9 (1 + |a0|).
    double classification_tolerance() const noexcept;

private:
    friend OvalSpec validate_oval(const TrigPoly& p);
    OvalSpec(TrigPoly p, double rho_min) : p_(std::move(p)), rho_min_(rho_min) {}

    TrigPoly p_;
    double rho_min_ = 0.0;
};

/// Throws NotAnOval when min(p + p'') <= 0.
OvalSpec validate_oval(const TrigPoly& p);

/// Point of the curve whose outward normal has angle theta.
Vec2 curve_point(const OvalSpec& o, double theta);

/// Coordinate series (x(theta), y(theta)) of the curve parameterisation by normal angle.
std::pair<TrigPoly, TrigPoly> curve_coordinates(const TrigPoly& p);

struct OvalSummary {
    double length = 0.0;             ///< 2 pi a0
    double length_quadrature = 0.0;  ///< integral of p + p''
    double area = 0.0;               ///< coefficient form
    double area_quadrature = 0.0;    ///< 1/2 integral of p^2 - p'^2
    double avg_width = 0.0;          ///< L / pi
    double width_min = 0.0;
    double width_max = 0.0;
    bool is_constant_width = false;
    bool is_centrally_symmetric = false;
    RootList vertex_angles;
    bool vertices_degenerate = false;  ///< curvature is constant (circle)
    Vec2 steiner;
};

OvalSummary geometry_summary(const OvalSpec& o);

/// No even harmonics n >= 2 above the classification tolerance.
bool is_constant_width(const OvalSpec& o);
/// No odd harmonics n >= 3 above the classification tolerance.
bool is_centrally_symmetric(const OvalSpec& o);

}  // namespace ovalsets
