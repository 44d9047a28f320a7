#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "circleroots/config.hpp"
#include "circleroots/oracle.hpp"
#include "circleroots/polynomial.hpp"

namespace circleroots {

/**
 * Parameters of the two-magnon polynomial
 *
 *   P(z) = (w + 1) z^n - 2 w D z^(n-1) - 2 D z + (w + 1),
 *
 * with w = exp(2 pi i a / n) and D the real anisotropy. `omega_override`
 * replaces w by an arbitrary unimodular value.
 */
struct BetheSpec {
    int n = 4;
    int a = 4;
    double delta = 0.0;
    std::optional<Coeff> omega_override;

    Coeff omega() const;
};

enum class BetheRegime { AllOnCircleSimple, TwoOffCircle, Indeterminate };

std::string_view to_string(BetheRegime regime) noexcept;

struct BetheRegimeReport {
    BetheRegime regime = BetheRegime::Indeterminate;
    double threshold_lo = 0.0;  // |(w + 1)/2|
    double threshold_hi = 0.0;  // n/(n-2) |(w + 1)/2|
    // Off-circle pair (s, w/s) found by the oracle in the TwoOffCircle regime.
    std::optional<std::pair<Coeff, Coeff>> off_pair;
    // |s * s' - w| for the pair above.
    double pair_product_error = 0.0;
    std::optional<RootClassification> classification;
};

// Throws InvalidArgument for n < 3, a outside [1, n], w = -1, or non-finite delta.
Polynomial bethe_polynomial(const BetheSpec& spec);

// Regime from the thresholds; the oracle runs in every regime so the
// report always carries a classification.
BetheRegimeReport classify_regime(const BetheSpec& spec, const Tolerances& tol = {});

struct SweepRow {
    double delta = 0.0;
    BetheRegime regime = BetheRegime::Indeterminate;
    bool ok = false;          // false if the oracle failed at this point
    RootCounts counts;
    bool simple = false;
    double min_root_gap = 0.0;
    std::string error;
};

// One row per grid value in grid order. Oracle failures are recorded in the
// row and the sweep continues.
std::vector<SweepRow> sweep(int n, int a, std::span<const double> delta_grid, const Tolerances& tol = {});

}  // namespace circleroots
