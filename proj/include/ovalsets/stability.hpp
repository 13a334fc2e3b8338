#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ovalsets/oval.hpp"
#include "ovalsets/trigpoly.hpp"
#include "ovalsets/vec2.hpp"

namespace ovalsets {

/// Support function of the Steiner symmetral translated to the Steiner point:
/// a0, the first harmonic and all even harmonics.
TrigPoly steiner_symmetral(const OvalSpec& o);

/// Constant-width oval L/(2 pi) + (p(t) - p(t + pi)) / 2 sharing the Wigner caustic of o.
OvalSpec wigner_type_curve(const OvalSpec& o);

enum class Metric { Sup, L2 };

/// Distance between two support functions in the sup or L2 norm.
double deviation(const TrigPoly& pk, const TrigPoly& pn, Metric metric);

struct BoundSlack {
    std::string id;
    std::string description;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;  ///< lhs - rhs, must be >= 0
};

struct StabilityReport {
    Vec2 steiner;
    double phi_wigner = 0.0;            ///< L^2 - 4 pi A - 8 pi |A_wigner|, spectral form
    double phi_wigner_geometric = 0.0;  ///< same from lengths and areas
    double phi_cwms = 0.0;              ///< L^2 - 4 pi A - pi |A_cwms|, spectral form
    double phi_cwms_geometric = 0.0;
    double d_inf_W = 0.0;
    double d_2_W = 0.0;
    double d_inf_S = 0.0;
    double d_2_S = 0.0;
    double length = 0.0;
    bool constant_width = false;
    /// In order: 6.6, 6.7, 6.8, 6.14, 6.16, 6.17 and, unless constant width, 6.18.
    std::vector<BoundSlack> bound_slacks;

    const BoundSlack* find(const std::string& id) const;
    bool all_hold(double rel_tol = 1e-9) const;
};

StabilityReport stability_report(const OvalSpec& o);

}  // namespace ovalsets
