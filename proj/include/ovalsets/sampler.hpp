#pragma once

#include <cstdint>
#include <random>

#include "ovalsets/trigpoly.hpp"

namespace ovalsets {

/// Seeded source of random support functions and series.
///
/// Uses mt19937_64 (whose output sequence is fixed by the standard) and its own
/// double conversion, so draws are identical across standard libraries.
class OvalSampler {
public:
    explicit OvalSampler(std::uint64_t seed) : rng_(seed) {}

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi);
    /// Uniform integer in [lo, hi].
    int uniform_int(int lo, int hi);

    /// Degree uniform in [min(2, max_degree), max_degree], coefficients uniform in
    /// [-1, 1], a0 = 1.05 sum n^2 (|a_n| + |b_n|) + 1, which keeps p + p'' > 0.
    TrigPoly next_support(int max_degree);

    /// Arbitrary series of degree <= max_degree with all coefficients uniform in [-1, 1].
    TrigPoly next_series(int max_degree);

private:
    std::mt19937_64 rng_;
};

}  // namespace ovalsets
