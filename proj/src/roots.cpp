#include "ovalsets/roots.hpp"

#include <algorithm>
#include <cmath>

#include "ovalsets/errors.hpp"

namespace ovalsets {

namespace {

double wrap_angle(double t) {
    double r = std::fmod(t, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    if (r >= kTwoPi) r -= kTwoPi;
    return r;
}

int sign_of(double v, double eps) {
    if (std::abs(v) <= eps) return 0;
    return v > 0.0 ? 1 : -1;
}

// f(lo) and f(hi) have strictly opposite signs.
double bisect(const std::function<double(double)>& f, double lo, double hi, double flo) {
    for (int it = 0; it < 200 && hi - lo > kRootTolerance; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double cyclic_distance(double a, double b) {
    const double d = std::abs(a - b);
    return std::min(d, kTwoPi - d);
}

// Sign-change pairs closer than the merge tolerance collapse into one touching zero;
// tangential zeros near a crossing are dropped.
void normalise(RootList& r) {
    for (auto& a : r.angles) a = wrap_angle(a);
    for (auto& a : r.tangential) a = wrap_angle(a);
    std::sort(r.angles.begin(), r.angles.end());

    if (r.angles.size() >= 2) {
        std::vector<double> kept;
        std::vector<bool> dropped(r.angles.size(), false);
        const std::size_t m = r.angles.size();
        for (std::size_t i = 0; i < m; ++i) {
            const std::size_t j = (i + 1) % m;
            if (i == j || dropped[i] || dropped[j]) continue;
            if (cyclic_distance(r.angles[i], r.angles[j]) < kMergeTolerance) {
                dropped[i] = dropped[j] = true;
                double mid = r.angles[i] + 0.5 * (r.angles[j] - r.angles[i]);
                if (j < i) mid = r.angles[i] + 0.5 * (r.angles[j] + kTwoPi - r.angles[i]);
                r.tangential.push_back(wrap_angle(mid));
            }
        }
        for (std::size_t i = 0; i < m; ++i) {
            if (!dropped[i]) kept.push_back(r.angles[i]);
        }
        r.angles = std::move(kept);
    }

    std::sort(r.tangential.begin(), r.tangential.end());
    std::vector<double> tang;
    for (double t : r.tangential) {
        const bool near_crossing = std::any_of(r.angles.begin(), r.angles.end(),
                                               [t](double a) { return cyclic_distance(a, t) < kMergeTolerance; });
        const bool dup = !tang.empty() && cyclic_distance(tang.back(), t) < kMergeTolerance;
        if (!near_crossing && !dup) tang.push_back(t);
    }
    if (tang.size() >= 2 && cyclic_distance(tang.front(), tang.back()) < kMergeTolerance) tang.pop_back();
    r.tangential = std::move(tang);
}

RootList scan(const std::function<double(double)>& f, std::size_t n, double eps) {
    RootList out;
    const double h = kTwoPi / static_cast<double>(n);
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = f(h * static_cast<double>(i));

    std::vector<int> s(n);
    auto classify = [&](double tol) {
        bool any = false;
        for (std::size_t i = 0; i < n; ++i) {
            s[i] = sign_of(v[i], tol);
            any = any || s[i] != 0;
        }
        return any;
    };
    if (!classify(eps) && !classify(0.0)) return out;

    std::size_t start = 0;
    while (s[start] == 0) ++start;

    auto theta = [&](std::size_t i) { return h * static_cast<double>(i); };

    // Walk nonzero samples cyclically.
    std::size_t i = start;
    std::size_t visited = 0;
    do {
        std::size_t steps = 1;
        std::size_t j = (i + 1) % n;
        while (s[j] == 0) {
            j = (j + 1) % n;
            ++steps;
        }
        const double ti = theta(i);
        const double tj = ti + h * static_cast<double>(steps);
        if (s[i] != s[j]) {
            out.angles.push_back(bisect(f, ti, tj, v[i]));
        } else if (steps > 1) {
            // Run of near-zero samples with equal signs on both sides: touching zero.
            std::size_t best = (i + 1) % n;
            for (std::size_t k = 1; k < steps; ++k) {
                const std::size_t idx = (i + k) % n;
                if (std::abs(v[idx]) < std::abs(v[best])) best = idx;
            }
            const double tb = ti + h * static_cast<double>((best + n - i) % n);
            const int sg = s[i];
            const double tmin =
                golden_minimize([&](double t) { return sg * f(t); }, std::max(ti, tb - h), std::min(tj, tb + h));
            const double fv = f(tmin);
            if (sg * fv < 0.0) {
                out.angles.push_back(bisect(f, ti, tmin, v[i]));
                out.angles.push_back(bisect(f, tmin, tj, fv));
            } else {
                out.tangential.push_back(tmin);
            }
        }
        visited += steps;
        i = j;
    } while (i != start && visited <= n);

    // Local minima of |f| strictly inside same-sign stretches.
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t km = (k + n - 1) % n;
        const std::size_t kp = (k + 1) % n;
        if (s[k] == 0 || s[km] != s[k] || s[kp] != s[k]) continue;
        const double a = std::abs(v[k]);
        if (a > std::abs(v[km]) || a > std::abs(v[kp])) continue;
        const int sg = s[k];
        const double lo = theta(k) - h;
        const double hi = theta(k) + h;
        const double tmin = golden_minimize([&](double t) { return sg * f(t); }, lo, hi);
        const double fv = f(tmin);
        if (sg * fv < 0.0) {
            out.angles.push_back(bisect(f, lo, tmin, v[km]));
            out.angles.push_back(bisect(f, tmin, hi, fv));
        } else if (std::abs(fv) <= eps) {
            out.tangential.push_back(tmin);
        }
    }

    normalise(out);
    return out;
}

}  // namespace

std::size_t isolation_grid_size(int degree) noexcept {
    return std::max<std::size_t>(1024, 256 * static_cast<std::size_t>(std::max(degree, 0)));
}

double value_tolerance(const TrigPoly& f) noexcept { return kValueTolerance * (1.0 + f.coefficient_l1()); }

RootList sign_changes(const std::function<double(double)>& f, std::size_t samples, double eps_val) {
    return scan(f, std::max<std::size_t>(samples, 8), eps_val);
}

RootList sign_changes(const TrigPoly& f, bool half_period) {
    if (f.is_zero(1e-15)) throw IdenticallyZero();
    RootList r = scan([&f](double t) { return f(t); }, isolation_grid_size(f.degree()), value_tolerance(f));
    if (half_period) {
        auto in_half = [](double t) { return t >= kPi; };
        std::erase_if(r.angles, in_half);
        std::erase_if(r.tangential, in_half);
    }
    return r;
}

Extrema extrema(const TrigPoly& f) {
    Extrema e;
    e.min = e.max = f(0.0);
    auto consider = [&](double t) {
        const double v = f(t);
        if (v < e.min) {
            e.min = v;
            e.argmin = t;
        }
        if (v > e.max) {
            e.max = v;
            e.argmax = t;
        }
    };
    if (f.terms().empty()) return e;

    const TrigPoly df = derivative(f);
    const std::size_t n = isolation_grid_size(f.degree());
    const double h = kTwoPi / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) consider(h * static_cast<double>(i));
    if (!df.is_zero(1e-15)) {
        const RootList crit = sign_changes(df);
        for (double t : crit.angles) consider(t);
        for (double t : crit.tangential) consider(t);
    }
    return e;
}

double sup_abs(const TrigPoly& f) {
    if (f.is_zero(0.0)) return 0.0;
    const Extrema e = extrema(f);
    return std::max(std::abs(e.min), std::abs(e.max));
}

double abs_integral(const TrigPoly& f) {
    if (f.is_zero(1e-15)) return 0.0;
    const RootList r = sign_changes(f);
    if (r.angles.empty()) return std::abs(period_integral(f));
    double total = 0.0;
    const std::size_t m = r.angles.size();
    for (std::size_t i = 0; i < m; ++i) {
        const double lo = r.angles[i];
        const double hi = (i + 1 < m) ? r.angles[i + 1] : r.angles[0] + kTwoPi;
        total += std::abs(integral(f, lo, hi));
    }
    return total;
}

double golden_minimize(const std::function<double(double)>& f, double lo, double hi, double tol) {
    constexpr double kInvPhi = 0.6180339887498949;
    double a = lo;
    double b = hi;
    double c = b - kInvPhi * (b - a);
    double d = a + kInvPhi * (b - a);
    double fc = f(c);
    double fd = f(d);
    for (int it = 0; it < 200 && (b - a) > tol; ++it) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kInvPhi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kInvPhi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

double periodic_trapezoid(const std::function<double(double)>& f, std::size_t n) {
    const double h = kTwoPi / static_cast<double>(n);
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += f(h * static_cast<double>(i));
    return s * h;
}

QuadratureResult adaptive_periodic_quadrature(const std::function<double(double)>& f, std::size_t n0,
                                              double rel_tol, std::size_t max_nodes, double abs_floor) {
    QuadratureResult r;
    std::size_t n = std::max<std::size_t>(n0, 4);
    double sum = 0.0;  // plain sum of samples on the current grid
    {
        const double h = kTwoPi / static_cast<double>(n);
        for (std::size_t i = 0; i < n; ++i) sum += f(h * static_cast<double>(i));
    }
    double prev = sum * kTwoPi / static_cast<double>(n);
    r.value = prev;
    r.nodes = n;
    while (2 * n <= max_nodes) {
        const double h = kTwoPi / static_cast<double>(2 * n);
        for (std::size_t i = 0; i < n; ++i) sum += f(h * static_cast<double>(2 * i + 1));
        n *= 2;
        const double cur = sum * h;
        r.value = cur;
        r.nodes = n;
        if (std::abs(cur - prev) <= rel_tol * std::max(std::abs(cur), abs_floor)) {
            r.converged = true;
            return r;
        }
        prev = cur;
    }
    return r;
}

}  // namespace ovalsets
