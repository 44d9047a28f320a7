#pragma once

#include <string_view>
#include <vector>

#include "circleroots/inversive.hpp"
#include "circleroots/polynomial.hpp"

namespace circleroots {

enum class PredictionKind { ExactOnCircle, AtLeastOnCircle, NoneOnCircle, AllOnCircle, NoPrediction };

// Which coefficient inequality produced a prediction.
enum class Criterion { ExactCount, AtLeast, NoRoots, Lakatos, Salem };

std::string_view to_string(PredictionKind kind) noexcept;
std::string_view to_string(Criterion criterion) noexcept;

/**
 * A criterion's claim about the number of roots on |z| = 1.
 *
 * margin = lhs - rhs of the governing inequality; the claim is made only
 * when margin > 0 (strict), otherwise kind is NoPrediction and the
 * nonpositive margin is still reported.
 */
struct RootCountPrediction {
    PredictionKind kind = PredictionKind::NoPrediction;
    Criterion criterion = Criterion::ExactCount;
    int count = 0;
    bool simple = false;
    int l = 0;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    // Only set by salem_criterion: fired, integer coefficients, omega = 1.
    bool salem_candidate = false;

    bool fired() const noexcept { return kind != PredictionKind::NoPrediction; }
};

// |a_{n-l}| > (1/2) (n/(n-2l)) sum_{k != l, n-l} |a_k|  =>  exactly n-2l simple
// roots on the circle. Requires 0 <= l < n/2.
RootCountPrediction exact_count_criterion(const Polynomial& p, int l, double tol = default_detect_tol);

// n even: |a_{n/2}| > sum_{k != n/2} |a_k|  =>  no roots on the circle.
RootCountPrediction no_roots_criterion(const Polynomial& p, double tol = default_detect_tol);

// |a_{n-l}| > (1/2) sum_{k != l, n-l} |a_k|  =>  at least n-2l roots on the circle.
RootCountPrediction at_least_criterion(const Polynomial& p, int l, double tol = default_detect_tol);

// l = 0 of the exact criterion: |a_n| > (1/2) sum_{k=1}^{n-1} |a_k|.
RootCountPrediction lakatos_criterion(const Polynomial& p, double tol = default_detect_tol);

// l = 1 of the exact criterion, n >= 3.
RootCountPrediction salem_criterion(const Polynomial& p, double tol = default_detect_tol);

// Every criterion at every admissible index, in a fixed order: for each l,
// exact then at-least; then the no-roots test for even n.
std::vector<RootCountPrediction> all_criteria(const Polynomial& p, double tol = default_detect_tol);

// Strongest fired prediction: exact/all/none beat at-least, then larger
// count, then larger margin. NoPrediction when nothing fires.
RootCountPrediction best_prediction(const Polynomial& p, double tol = default_detect_tol);

struct PhaseDecomposition {
    double sigma = 0.0;            // arg omega in (-pi, pi]
    std::vector<double> phases;    // arg a_k
    std::vector<double> magnitudes;
    std::vector<double> t_nodes;   // n-2l+1 nodes spanning one period
};

struct LocalizationInterval {
    double t_lo = 0.0;
    double t_hi = 0.0;
    int sign_lo = 0;
    int sign_hi = 0;
};

struct Localization {
    PhaseDecomposition phase;
    std::vector<LocalizationInterval> intervals;
    // r(t_j) has sign s (-1)^j at every node for a fixed s.
    bool alternating = false;
};

PhaseDecomposition phase_decomposition(const Polynomial& p, int l, double tol = default_detect_tol);

// r(t) = omega^{-1/2} e^{-int/2} p(e^{it}), real for self-inversive p.
// Returned as a complex number so callers can check the imaginary part.
Coeff trig_form(const Polynomial& p, Coeff omega, double t);

/**
 * Split one period of t into n-2l intervals between the nodes where the
 * paired term a_l z^l + a_{n-l} z^{n-l} attains its extreme values. When the
 * at-least criterion holds, r(t) alternates sign across the nodes, so each
 * interval holds at least one root e^{it}.
 *
 * Throws InvalidArgument if the at-least criterion does not fire and
 * DegenerateNode if some |r(t_j)| vanishes within tolerance.
 */
Localization trig_localize(const Polynomial& p, int l, double tol = default_detect_tol);

// theta + 2 pi m in (t_lo, t_hi) for some integer m.
bool angle_in_interval(double theta, const LocalizationInterval& interval) noexcept;

}  // namespace circleroots
