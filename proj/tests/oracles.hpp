#pragma once

// Brute-force reference computations for trigonometric polynomials.
//
// Everything here samples the series on a dense uniform grid using complex
// powers of e^{it} and never calls into the library's evaluation or root code,
// so agreement with the library is a genuine cross-check.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "ovalsets/trigpoly.hpp"

namespace oracle {

inline constexpr std::size_t kDenseNodes = 1'000'000;

/// Values and first derivatives of f on a uniform grid of n nodes.
struct DenseSamples {
    std::size_t n = 0;
    double h = 0.0;
    std::vector<double> f;
    std::vector<double> df;
};

inline const std::vector<std::complex<double>>& unit_roots(std::size_t n) {
    static std::vector<std::complex<double>> cache;
    if (cache.size() != n) {
        cache.resize(n);
        const double h = 2.0 * 3.14159265358979323846 / static_cast<double>(n);
        for (std::size_t k = 0; k < n; ++k) cache[k] = std::polar(1.0, h * static_cast<double>(k));
    }
    return cache;
}

inline DenseSamples sample(const ovalsets::TrigPoly& p, std::size_t n = kDenseNodes) {
    DenseSamples s;
    s.n = n;
    s.h = 2.0 * 3.14159265358979323846 / static_cast<double>(n);
    s.f.assign(n, p.a0());
    s.df.assign(n, 0.0);
    const auto& z = unit_roots(n);
    const int deg = p.degree();
    std::vector<double> a(deg + 1, 0.0), b(deg + 1, 0.0);
    for (const auto& t : p.terms()) {
        a[t.n] = t.a;
        b[t.n] = t.b;
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::complex<double> w = 1.0;
        double v = 0.0, d = 0.0;
        for (int m = 1; m <= deg; ++m) {
            w *= z[k];
            // a cos + b sin and its derivative from e^{imt}.
            v += a[m] * w.real() + b[m] * w.imag();
            d += m * (b[m] * w.real() - a[m] * w.imag());
        }
        s.f[k] += v;
        s.df[k] = d;
    }
    return s;
}

/// max |f| with a parabolic correction at the best node.
inline double sup_abs(const DenseSamples& s) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < s.n; ++k) {
        if (std::abs(s.f[k]) > std::abs(s.f[best])) best = k;
    }
    const double fm = std::abs(s.f[(best + s.n - 1) % s.n]);
    const double f0 = std::abs(s.f[best]);
    const double fp = std::abs(s.f[(best + 1) % s.n]);
    const double curv = 2.0 * f0 - fm - fp;
    return curv > 0.0 ? f0 + (fp - fm) * (fp - fm) / (8.0 * curv) : f0;
}

/// Sign-change locations from the cubic Hermite interpolant of each bracketing cell.
inline std::vector<double> sign_changes(const DenseSamples& s) {
    std::vector<double> out;
    for (std::size_t k = 0; k < s.n; ++k) {
        const double f0 = s.f[k];
        const double f1 = s.f[(k + 1) % s.n];
        // Exact zeros count as positive.
        if ((f0 < 0.0) != (f1 < 0.0)) {
            // Cubic Hermite interpolant root, refined by Newton on the interpolant.
            const double h = s.h;
            const double d0 = s.df[k] * h, d1 = s.df[(k + 1) % s.n] * h;
            double u = f0 / (f0 - f1);
            for (int it = 0; it < 8; ++it) {
                const double u2 = u * u, u3 = u2 * u;
                const double val = (2 * u3 - 3 * u2 + 1) * f0 + (u3 - 2 * u2 + u) * d0 + (-2 * u3 + 3 * u2) * f1 +
                                   (u3 - u2) * d1;
                const double der = (6 * u2 - 6 * u) * f0 + (3 * u2 - 4 * u + 1) * d0 + (-6 * u2 + 6 * u) * f1 +
                                   (3 * u2 - 2 * u) * d1;
                if (der == 0.0) break;
                u = std::clamp(u - val / der, 0.0, 1.0);
            }
            out.push_back((static_cast<double>(k) + u) * h);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Integral of |f| over one period: Hermite-corrected trapezoid on every cell,
/// cells containing a sign change split at the interpolated zero.
inline double abs_integral(const DenseSamples& s) {
    const auto zeros = sign_changes(s);
    std::size_t zi = 0;
    auto hermite = [](double len, double g0, double g1, double d0, double d1) {
        return 0.5 * len * (g0 + g1) + len * len / 12.0 * (d0 - d1);
    };
    double total = 0.0;
    for (std::size_t k = 0; k < s.n; ++k) {
        const double t0 = static_cast<double>(k) * s.h;
        const double f0 = s.f[k], f1 = s.f[(k + 1) % s.n];
        const double d0 = s.df[k], d1 = s.df[(k + 1) % s.n];
        if (zi < zeros.size() && zeros[zi] >= t0 && zeros[zi] < t0 + s.h) {
            const double z = zeros[zi++];
            // Derivative at the zero from linear blend of the end derivatives.
            const double w = (z - t0) / s.h;
            const double dz = (1.0 - w) * d0 + w * d1;
            const double sg0 = f0 < 0.0 ? -1.0 : 1.0;
            total += hermite(z - t0, sg0 * f0, 0.0, sg0 * d0, sg0 * dz);
            total += hermite(t0 + s.h - z, -sg0 * 0.0, -sg0 * f1, -sg0 * dz, -sg0 * d1);
        } else {
            const double sg = (f0 + f1) < 0.0 ? -1.0 : 1.0;
            total += hermite(s.h, sg * f0, sg * f1, sg * d0, sg * d1);
        }
    }
    return total;
}

}  // namespace oracle
