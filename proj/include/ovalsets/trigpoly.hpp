#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace ovalsets {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// One harmonic a*cos(n t) + b*sin(n t).
struct Harmonic {
    int n = 1;
    double a = 0.0;
    double b = 0.0;

    friend bool operator==(const Harmonic&, const Harmonic&) = default;
};

/// Finite Fourier series a0 + sum_n (a_n cos n t + b_n sin n t).
///
/// Always stored in canonical form: harmonics sorted by strictly increasing
/// index, every index in [1, kMaxDegree], no (0, 0) pairs. Values are
/// immutable once built.
class TrigPoly {
public:
    static constexpr int kMaxDegree = 64;

    TrigPoly() = default;

    /// Throws InvalidTrigPoly on duplicate or out-of-range indices and non-finite values.
    explicit TrigPoly(double a0, std::vector<Harmonic> terms = {});

    static TrigPoly constant(double c) { return TrigPoly(c); }
    static TrigPoly cosine(int n, double amplitude = 1.0) { return TrigPoly(0.0, {{n, amplitude, 0.0}}); }
    static TrigPoly sine(int n, double amplitude = 1.0) { return TrigPoly(0.0, {{n, 0.0, amplitude}}); }

    double a0() const noexcept { return a0_; }
    std::span<const Harmonic> terms() const noexcept { return terms_; }
    int degree() const noexcept { return terms_.empty() ? 0 : terms_.back().n; }

    /// Cosine / sine coefficient of harmonic n (n = 0 gives a0 / 0).
    double cos_coef(int n) const noexcept;
    double sin_coef(int n) const noexcept;

    /// order-th derivative at theta.
    double eval(double theta, int order = 0) const noexcept;
    double operator()(double theta) const noexcept { return eval(theta, 0); }

    /// Sum of absolute values of all coefficients, a0 included.
    double coefficient_l1() const noexcept;
    /// Largest absolute coefficient.
    double coefficient_max() const noexcept;

    /// True when every coefficient is within tol of zero.
    bool is_zero(double tol = 0.0) const noexcept;

    friend bool operator==(const TrigPoly&, const TrigPoly&) = default;

private:
    double a0_ = 0.0;
    std::vector<Harmonic> terms_;
};

TrigPoly operator+(const TrigPoly& f, const TrigPoly& g);
TrigPoly operator-(const TrigPoly& f, const TrigPoly& g);
TrigPoly operator*(double s, const TrigPoly& f);
TrigPoly operator-(const TrigPoly& f);

/// alpha f + beta g.
TrigPoly combine(double alpha, const TrigPoly& f, double beta, const TrigPoly& g);

/// g(t) = f(t + pi): odd harmonics flip sign.
TrigPoly antipodal_shift(const TrigPoly& f);

/// k-th derivative as a series.
TrigPoly derivative(const TrigPoly& f, int order = 1);

struct ParityParts {
    TrigPoly even;  ///< a0 and the even harmonics
    TrigPoly odd;   ///< odd harmonics
};
ParityParts parity_parts(const TrigPoly& f);

/// Keep only harmonics whose index satisfies pred; a0 kept iff keep_a0.
template <class Pred>
TrigPoly filter_harmonics(const TrigPoly& f, bool keep_a0, Pred pred) {
    std::vector<Harmonic> out;
    for (const auto& h : f.terms()) {
        if (pred(h.n)) out.push_back(h);
    }
    return TrigPoly(keep_a0 ? f.a0() : 0.0, std::move(out));
}

/// Product of two series; the result must respect the degree cap.
TrigPoly multiply(const TrigPoly& f, const TrigPoly& g);

/// f(-t): sine coefficients flip sign.
TrigPoly reflect_parameter(const TrigPoly& f);

/// Integral of f over [alpha, beta] from the closed-form antiderivative.
double integral(const TrigPoly& f, double alpha, double beta) noexcept;

/// Integral over one period: 2 pi a0.
inline double period_integral(const TrigPoly& f) noexcept { return kTwoPi * f.a0(); }

/// Integral of f^2 over one period (Parseval).
double l2_norm_sq(const TrigPoly& f) noexcept;

}  // namespace ovalsets
