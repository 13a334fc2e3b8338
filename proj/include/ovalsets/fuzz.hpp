#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ovalsets/trigpoly.hpp"

namespace ovalsets {

/// Outcome of the cross-module invariant suite on one support function.
struct OvalCheck {
    bool generic = true;  ///< no tangential zeros among vertices or cusps
    std::vector<std::string> failures;

    bool passed() const noexcept { return failures.empty(); }
};

/// Runs summary cross-checks, identities, stability bounds, cusp parities and
/// the parametric SMS cross-check. Parity checks are skipped on non-generic input.
OvalCheck check_oval(const TrigPoly& p, bool parametric_cross_check = true);

struct FuzzFailure {
    std::size_t index = 0;
    TrigPoly support;
    std::vector<std::string> failures;
};

struct FuzzSummary {
    std::uint64_t seed = 0;
    std::size_t count = 0;
    int degree = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t non_generic = 0;
    std::vector<FuzzFailure> failures;

    bool ok() const noexcept { return failed == 0; }
};

/// Draws count ovals from OvalSampler(seed) and checks each one. Cases run
/// concurrently and are merged by index, so the summary depends only on the arguments.
FuzzSummary run_fuzz(std::uint64_t seed, std::size_t count, int degree);

}  // namespace ovalsets
