#include "ovalsets/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace ovalsets {

double OvalSampler::uniform(double lo, double hi) {
    const double u = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

int OvalSampler::uniform_int(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(rng_() % span);
}

TrigPoly OvalSampler::next_support(int max_degree) {
    const int degree = uniform_int(std::min(2, max_degree), max_degree);
    std::vector<Harmonic> terms;
    double bound = 0.0;
    for (int n = 1; n <= degree; ++n) {
        const double a = uniform(-1.0, 1.0);
        const double b = uniform(-1.0, 1.0);
        terms.push_back({n, a, b});
        bound += static_cast<double>(n) * n * (std::abs(a) + std::abs(b));
    }
    return TrigPoly(1.05 * bound + 1.0, std::move(terms));
}

TrigPoly OvalSampler::next_series(int max_degree) {
    const int degree = uniform_int(1, max_degree);
    const double a0 = uniform(-1.0, 1.0);
    std::vector<Harmonic> terms;
    for (int n = 1; n <= degree; ++n) {
        const double a = uniform(-1.0, 1.0);
        const double b = uniform(-1.0, 1.0);
        terms.push_back({n, a, b});
    }
    return TrigPoly(a0, std::move(terms));
}

}  // namespace ovalsets
