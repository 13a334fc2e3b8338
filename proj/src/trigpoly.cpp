#include "ovalsets/trigpoly.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "ovalsets/errors.hpp"

namespace ovalsets {

namespace {

// Builds canonical form from an index->(a, b) map, dropping zero pairs.
TrigPoly from_map(double a0, const std::map<int, std::pair<double, double>>& m) {
    std::vector<Harmonic> terms;
    terms.reserve(m.size());
    for (const auto& [n, ab] : m) {
        if (ab.first != 0.0 || ab.second != 0.0) terms.push_back({n, ab.first, ab.second});
    }
    return TrigPoly(a0, std::move(terms));
}

}  // namespace

TrigPoly::TrigPoly(double a0, std::vector<Harmonic> terms) : a0_(a0) {
    if (!std::isfinite(a0)) throw InvalidTrigPoly("non-finite constant term");
    std::sort(terms.begin(), terms.end(), [](const Harmonic& l, const Harmonic& r) { return l.n < r.n; });
    terms_.reserve(terms.size());
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const Harmonic& h = terms[i];
        if (h.n < 1) throw InvalidTrigPoly("harmonic index must be >= 1, got " + std::to_string(h.n));
        if (h.n > kMaxDegree) {
            throw InvalidTrigPoly("harmonic index " + std::to_string(h.n) + " exceeds degree cap " +
                                  std::to_string(kMaxDegree));
        }
        if (i > 0 && terms[i - 1].n == h.n) throw InvalidTrigPoly("duplicate harmonic index " + std::to_string(h.n));
        if (!std::isfinite(h.a) || !std::isfinite(h.b)) throw InvalidTrigPoly("non-finite coefficient");
        if (h.a == 0.0 && h.b == 0.0) continue;
        terms_.push_back(h);
    }
}

double TrigPoly::cos_coef(int n) const noexcept {
    if (n == 0) return a0_;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), n, [](const Harmonic& h, int k) { return h.n < k; });
    return (it != terms_.end() && it->n == n) ? it->a : 0.0;
}

double TrigPoly::sin_coef(int n) const noexcept {
    if (n == 0) return 0.0;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), n, [](const Harmonic& h, int k) { return h.n < k; });
    return (it != terms_.end() && it->n == n) ? it->b : 0.0;
}

double TrigPoly::eval(double theta, int order) const noexcept {
    double sum = (order == 0) ? a0_ : 0.0;
    if (terms_.empty()) return sum;

    // cos(k theta), sin(k theta) by angle addition; exact restart every 16 steps keeps drift negligible.
    const double c1 = std::cos(theta);
    const double s1 = std::sin(theta);
    double ck = 1.0;
    double sk = 0.0;
    int k = 0;
    const int phase = ((order % 4) + 4) % 4;
    for (const Harmonic& h : terms_) {
        while (k < h.n) {
            ++k;
            if (k % 16 == 0) {
                ck = std::cos(k * theta);
                sk = std::sin(k * theta);
            } else {
                const double c = ck * c1 - sk * s1;
                sk = sk * c1 + ck * s1;
                ck = c;
            }
        }
        double v = 0.0;
        switch (phase) {
            case 0: v = h.a * ck + h.b * sk; break;
            case 1: v = -h.a * sk + h.b * ck; break;
            case 2: v = -(h.a * ck + h.b * sk); break;
            default: v = h.a * sk - h.b * ck; break;
        }
        sum += std::pow(static_cast<double>(h.n), order) * v;
    }
    return sum;
}

double TrigPoly::coefficient_l1() const noexcept {
    double s = std::abs(a0_);
    for (const auto& h : terms_) s += std::abs(h.a) + std::abs(h.b);
    return s;
}

double TrigPoly::coefficient_max() const noexcept {
    double m = std::abs(a0_);
    for (const auto& h : terms_) m = std::max({m, std::abs(h.a), std::abs(h.b)});
    return m;
}

bool TrigPoly::is_zero(double tol) const noexcept {
    if (std::abs(a0_) > tol) return false;
    return std::all_of(terms_.begin(), terms_.end(),
                       [tol](const Harmonic& h) { return std::abs(h.a) <= tol && std::abs(h.b) <= tol; });
}

TrigPoly combine(double alpha, const TrigPoly& f, double beta, const TrigPoly& g) {
    std::map<int, std::pair<double, double>> m;
    for (const auto& h : f.terms()) {
        auto& e = m[h.n];
        e.first += alpha * h.a;
        e.second += alpha * h.b;
    }
    for (const auto& h : g.terms()) {
        auto& e = m[h.n];
        e.first += beta * h.a;
        e.second += beta * h.b;
    }
    return from_map(alpha * f.a0() + beta * g.a0(), m);
}

TrigPoly operator+(const TrigPoly& f, const TrigPoly& g) { return combine(1.0, f, 1.0, g); }
TrigPoly operator-(const TrigPoly& f, const TrigPoly& g) { return combine(1.0, f, -1.0, g); }
TrigPoly operator*(double s, const TrigPoly& f) { return combine(s, f, 0.0, TrigPoly{}); }
TrigPoly operator-(const TrigPoly& f) { return (-1.0) * f; }

TrigPoly antipodal_shift(const TrigPoly& f) {
    std::vector<Harmonic> out(f.terms().begin(), f.terms().end());
    for (auto& h : out) {
        if (h.n % 2 == 1) {
            h.a = -h.a;
            h.b = -h.b;
        }
    }
    return TrigPoly(f.a0(), std::move(out));
}

TrigPoly derivative(const TrigPoly& f, int order) {
    if (order == 0) return f;
    std::vector<Harmonic> out;
    out.reserve(f.terms().size());
    const int phase = ((order % 4) + 4) % 4;
    for (const auto& h : f.terms()) {
        const double scale = std::pow(static_cast<double>(h.n), order);
        Harmonic d{h.n, 0.0, 0.0};
        switch (phase) {
            case 0: d.a = h.a; d.b = h.b; break;
            case 1: d.a = h.b; d.b = -h.a; break;
            case 2: d.a = -h.a; d.b = -h.b; break;
            default: d.a = -h.b; d.b = h.a; break;
        }
        d.a *= scale;
        d.b *= scale;
        out.push_back(d);
    }
    return TrigPoly(0.0, std::move(out));
}

ParityParts parity_parts(const TrigPoly& f) {
    return {filter_harmonics(f, true, [](int n) { return n % 2 == 0; }),
            filter_harmonics(f, false, [](int n) { return n % 2 == 1; })};
}

TrigPoly multiply(const TrigPoly& f, const TrigPoly& g) {
    // Work with complex-free real products:
    // cos m cos n = (cos(m-n) + cos(m+n))/2, sin m sin n = (cos(m-n) - cos(m+n))/2,
    // sin m cos n = (sin(m+n) + sin(m-n))/2.
    std::map<int, std::pair<double, double>> m;
    double a0 = f.a0() * g.a0();
    auto add = [&](int k, double ca, double sb) {
        if (k == 0) {
            a0 += ca;
            return;
        }
        if (k < 0) {
            k = -k;
            sb = -sb;
        }
        auto& e = m[k];
        e.first += ca;
        e.second += sb;
    };
    for (const auto& h : g.terms()) add(h.n, f.a0() * h.a, f.a0() * h.b);
    for (const auto& h : f.terms()) add(h.n, g.a0() * h.a, g.a0() * h.b);
    for (const auto& p : f.terms()) {
        for (const auto& q : g.terms()) {
            const int s = p.n + q.n;
            const int d = p.n - q.n;
            // cos*cos
            add(d, 0.5 * p.a * q.a, 0.0);
            add(s, 0.5 * p.a * q.a, 0.0);
            // sin*sin
            add(d, 0.5 * p.b * q.b, 0.0);
            add(s, -0.5 * p.b * q.b, 0.0);
            // sin(p) cos(q) = (sin(s) + sin(d))/2
            add(s, 0.0, 0.5 * p.b * q.a);
            add(d, 0.0, 0.5 * p.b * q.a);
            // cos(p) sin(q) = (sin(s) - sin(d))/2
            add(s, 0.0, 0.5 * p.a * q.b);
            add(d, 0.0, -0.5 * p.a * q.b);
        }
    }
    return from_map(a0, m);
}

TrigPoly reflect_parameter(const TrigPoly& f) {
    std::vector<Harmonic> out(f.terms().begin(), f.terms().end());
    for (auto& h : out) h.b = -h.b;
    return TrigPoly(f.a0(), std::move(out));
}

double integral(const TrigPoly& f, double alpha, double beta) noexcept {
    double sum = f.a0() * (beta - alpha);
    for (const auto& h : f.terms()) {
        const double n = h.n;
        sum += (h.a / n) * (std::sin(n * beta) - std::sin(n * alpha));
        sum -= (h.b / n) * (std::cos(n * beta) - std::cos(n * alpha));
    }
    return sum;
}

double l2_norm_sq(const TrigPoly& f) noexcept {
    double s = 0.0;
    for (const auto& h : f.terms()) s += h.a * h.a + h.b * h.b;
    return kTwoPi * f.a0() * f.a0() + kPi * s;
}

}  // namespace ovalsets
