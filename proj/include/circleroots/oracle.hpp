#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "circleroots/config.hpp"
#include "circleroots/criteria.hpp"
#include "circleroots/polynomial.hpp"

namespace circleroots {

enum class Band { Inside, OnCircle, Outside };

std::string_view to_string(Band band) noexcept;

struct Root {
    Coeff value;
    int multiplicity = 1;
    Band band = Band::Inside;
};

struct RootCounts {
    int inside = 0;
    int on = 0;
    int outside = 0;

    int total() const noexcept { return inside + on + outside; }
    friend bool operator==(const RootCounts&, const RootCounts&) = default;
};

/**
 * Numeric root set of a polynomial. Roots closer than the cluster radius are
 * merged into one entry carrying the cluster size as multiplicity, so the
 * multiplicities always sum to the degree.
 */
struct RootClassification {
    std::vector<Root> roots;
    RootCounts counts;
    double tol_circle = 0.0;
    // max over roots of |p(r)| / sum_k |a_k||r|^k
    double residual = 0.0;
    int iterations = 0;
};

/**
 * All roots by Aberth-Ehrlich simultaneous iteration, started from a
 * perturbed circle of radius (|a_0|/|a_n|)^(1/n) and finished with Newton
 * polishing (on p^(m-1) for an m-fold cluster).
 *
 * Throws InvalidArgument for degree 0 and OracleFailure if the stopping rule
 * is not met within tol.max_iterations sweeps.
 */
RootClassification find_roots(const Polynomial& p, const Tolerances& tol = {});

/**
 * Number of zeros of p in |z| < radius, by tracking arg p(z) around the
 * circle and refining any step whose phase increment reaches pi/2.
 *
 * Throws ContourTooClose if |p| on the contour falls below the floor set
 * by tol.contour_floor.
 */
int winding_count(const Polynomial& p, double radius, const Tolerances& tol = {});

/**
 * winding_count(p, 1 + w) - winding_count(p, 1 - w) with w = tol.annulus.
 * The guard band (w/2, 2w) around the circle must be free of roots; this is
 * checked against `cls` (or a fresh find_roots) and violations throw
 * ContourTooClose.
 */
int count_on_circle(const Polynomial& p, const Tolerances& tol = {});
int count_on_circle(const Polynomial& p, const RootClassification& cls, const Tolerances& tol = {});

// True if some root has ||r| - 1| in (w/2, 2w).
bool guard_band_occupied(const RootClassification& cls, double annulus) noexcept;

// True if some root has ||r| - 1| in (tol_circle, w/2], where banding and
// annulus differencing legitimately disagree.
bool band_ambiguous(const RootClassification& cls, double annulus) noexcept;

/**
 * Every on-circle root has multiplicity one, |p'(r)| above the relative
 * floor tol.simple, and distinct on-circle roots are further apart than
 * the cluster radius.
 */
bool simplicity_check(const Polynomial& p, const RootClassification& cls, const Tolerances& tol = {});

// Smallest distance between on-circle roots; 0 if any is multiple,
// +inf if fewer than two.
double min_on_circle_gap(const RootClassification& cls) noexcept;

// Smallest distance between any two roots, 0 if any root is multiple.
double min_root_gap(const RootClassification& cls) noexcept;

enum class ClauseStatus { Pass, Fail, Inconclusive };

std::string_view to_string(ClauseStatus status) noexcept;

struct Clause {
    std::string name;
    ClauseStatus status = ClauseStatus::Inconclusive;
    std::string detail;
};

struct Verification {
    ClauseStatus overall = ClauseStatus::Inconclusive;
    std::vector<Clause> clauses;
    RootClassification classification;
    bool has_classification = false;
};

/**
 * Check a prediction against the oracle: the count clause (banding, plus the
 * annulus count when its guard band is clear), the simplicity clause when the
 * prediction asserts it, and the Cohn clause (roots strictly inside the
 * circle agree for p and its Cohn transform). Oracle failures make a clause
 * inconclusive, never a pass.
 */
Verification verify_prediction(const Polynomial& p, const RootCountPrediction& pred,
                               const Tolerances& tol = {});

}  // namespace circleroots
