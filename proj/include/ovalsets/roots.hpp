#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "ovalsets/trigpoly.hpp"

namespace ovalsets {

/// Zero set of a periodic function.
struct RootList {
    std::vector<double> angles;      ///< sign changes, sorted, in the domain
    std::vector<double> tangential;  ///< zeros without a sign change

    bool generic() const noexcept { return tangential.empty(); }
};

inline constexpr double kRootTolerance = 1e-12;
inline constexpr double kMergeTolerance = 1e-9;
inline constexpr double kValueTolerance = 1e-10;

/// Uniform grid size used for root isolation of a degree-d series.
std::size_t isolation_grid_size(int degree) noexcept;

/// Value below which a sample of f counts as zero: 1e-10 (1 + sum |coefficients|).
double value_tolerance(const TrigPoly& f) noexcept;

/// Sign changes of f on [0, 2 pi), or only those in [0, pi) when half_period.
///
/// Grid scan plus bisection to kRootTolerance. Zeros that touch without
/// crossing are returned in RootList::tangential. Throws IdenticallyZero when
/// every coefficient is below 1e-15.
RootList sign_changes(const TrigPoly& f, bool half_period = false);

/// Same scan for an arbitrary 2 pi-periodic callable.
RootList sign_changes(const std::function<double(double)>& f, std::size_t samples, double eps_val);

struct Extrema {
    double min = 0.0;
    double argmin = 0.0;
    double max = 0.0;
    double argmax = 0.0;
};

/// Global min and max of f over one period.
Extrema extrema(const TrigPoly& f);

/// max |f| over one period.
double sup_abs(const TrigPoly& f);

/// Integral of |f| over one period, split at the sign changes of f.
double abs_integral(const TrigPoly& f);

/// Minimise a unimodal function on [lo, hi] by golden-section search.
double golden_minimize(const std::function<double(double)>& f, double lo, double hi, double tol = 1e-13);

/// Periodic trapezoid rule with n nodes on [0, 2 pi).
double periodic_trapezoid(const std::function<double(double)>& f, std::size_t n);

struct QuadratureResult {
    double value = 0.0;
    std::size_t nodes = 0;
    bool converged = false;
};

/// Periodic trapezoid, doubling from n0 nodes until successive estimates agree
/// to rel_tol (relative, with an absolute floor of rel_tol * abs_floor), capped at max_nodes.
QuadratureResult adaptive_periodic_quadrature(const std::function<double(double)>& f, std::size_t n0,
                                              double rel_tol = 1e-12, std::size_t max_nodes = std::size_t{1} << 20,
                                              double abs_floor = 0.0);

}  // namespace ovalsets
