#include "circleroots/criteria.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <tuple>

#include "circleroots/error.hpp"

namespace circleroots {

std::string_view to_string(PredictionKind kind) noexcept {
    switch (kind) {
        case PredictionKind::ExactOnCircle: return "ExactOnCircle";
        case PredictionKind::AtLeastOnCircle: return "AtLeastOnCircle";
        case PredictionKind::NoneOnCircle: return "NoneOnCircle";
        case PredictionKind::AllOnCircle: return "AllOnCircle";
        case PredictionKind::NoPrediction: break;
    }
    return "NoPrediction";
}

std::string_view to_string(Criterion criterion) noexcept {
    switch (criterion) {
        case Criterion::ExactCount: return "exact";
        case Criterion::AtLeast: return "at_least";
        case Criterion::NoRoots: return "no_roots";
        case Criterion::Lakatos: return "lakatos";
        case Criterion::Salem: return "salem";
    }
    return "unknown";
}

namespace {

InversiveReport require_self_inversive(const Polynomial& p, double tol) {
    if (p.degree() < 1)
        throw InvalidArgument("criteria need degree >= 1");
    auto report = detect(p, tol);
    if (!report.is_self_inversive)
        throw NotSelfInversive("polynomial is not self-inversive (residual " +
                               std::to_string(report.max_residual) + ")");
    return report;
}

void require_pair_index(int n, int l) {
    if (l < 0 || 2 * l >= n)
        throw InvalidArgument("index l = " + std::to_string(l) + " outside [0, n/2) for n = " +
                              std::to_string(n));
}

// sum of |a_k| over k not in {l, n-l}
double off_pair_sum(const Polynomial& p, int l) {
    const int n = p.degree();
    double s = 0.0;
    for (int k = 0; k <= n; ++k)
        if (k != l && k != n - l)
            s += std::abs(p[k]);
    return s;
}

RootCountPrediction pair_prediction(const Polynomial& p, int l, double rhs, PredictionKind kind,
                                    Criterion criterion, bool simple) {
    const int n = p.degree();
    RootCountPrediction pred;
    pred.criterion = criterion;
    pred.l = l;
    pred.lhs = std::abs(p[n - l]);
    pred.rhs = rhs;
    pred.margin = pred.lhs - pred.rhs;
    if (pred.lhs > pred.rhs) {
        pred.kind = kind;
        pred.count = n - 2 * l;
        pred.simple = simple;
    }
    return pred;
}

RootCountPrediction exact_unchecked(const Polynomial& p, int l) {
    const int n = p.degree();
    const double rhs = 0.5 * (static_cast<double>(n) / (n - 2 * l)) * off_pair_sum(p, l);
    return pair_prediction(p, l, rhs, PredictionKind::ExactOnCircle, Criterion::ExactCount, true);
}

RootCountPrediction at_least_unchecked(const Polynomial& p, int l) {
    return pair_prediction(p, l, 0.5 * off_pair_sum(p, l), PredictionKind::AtLeastOnCircle,
                           Criterion::AtLeast, false);
}

RootCountPrediction lakatos_unchecked(const Polynomial& p) {
    auto pred = exact_unchecked(p, 0);
    pred.criterion = Criterion::Lakatos;
    if (pred.fired())
        pred.kind = PredictionKind::AllOnCircle;
    return pred;
}

RootCountPrediction no_roots_unchecked(const Polynomial& p) {
    const int n = p.degree();
    RootCountPrediction pred;
    pred.criterion = Criterion::NoRoots;
    pred.l = n / 2;
    pred.lhs = std::abs(p[n / 2]);
    pred.rhs = p.abs_sum() - pred.lhs;
    pred.margin = pred.lhs - pred.rhs;
    if (pred.lhs > pred.rhs) {
        pred.kind = PredictionKind::NoneOnCircle;
        pred.count = 0;
        pred.simple = true;  // vacuous
    }
    return pred;
}

int strength(PredictionKind kind) {
    switch (kind) {
        case PredictionKind::ExactOnCircle:
        case PredictionKind::AllOnCircle:
        case PredictionKind::NoneOnCircle: return 2;
        case PredictionKind::AtLeastOnCircle: return 1;
        case PredictionKind::NoPrediction: break;
    }
    return 0;
}

}  // namespace

RootCountPrediction exact_count_criterion(const Polynomial& p, int l, double tol) {
    require_self_inversive(p, tol);
    require_pair_index(p.degree(), l);
    return exact_unchecked(p, l);
}

RootCountPrediction no_roots_criterion(const Polynomial& p, double tol) {
    require_self_inversive(p, tol);
    if (p.degree() % 2 != 0)
        throw InvalidArgument("no_roots_criterion needs even degree");
    return no_roots_unchecked(p);
}

RootCountPrediction at_least_criterion(const Polynomial& p, int l, double tol) {
    require_self_inversive(p, tol);
    require_pair_index(p.degree(), l);
    return at_least_unchecked(p, l);
}

RootCountPrediction lakatos_criterion(const Polynomial& p, double tol) {
    require_self_inversive(p, tol);
    return lakatos_unchecked(p);
}

RootCountPrediction salem_criterion(const Polynomial& p, double tol) {
    const auto inv = require_self_inversive(p, tol);
    if (p.degree() < 3)
        throw InvalidArgument("salem_criterion needs degree >= 3");
    auto pred = exact_unchecked(p, 1);
    pred.criterion = Criterion::Salem;
    pred.salem_candidate = pred.fired() && inv.is_self_reciprocal && has_integer_coefficients(p, 1e-9);
    return pred;
}

std::vector<RootCountPrediction> all_criteria(const Polynomial& p, double tol) {
    require_self_inversive(p, tol);
    const int n = p.degree();
    std::vector<RootCountPrediction> out;
    for (int l = 0; 2 * l < n; ++l) {
        out.push_back(l == 0 ? lakatos_unchecked(p) : exact_unchecked(p, l));
        out.push_back(at_least_unchecked(p, l));
    }
    if (n % 2 == 0)
        out.push_back(no_roots_unchecked(p));
    return out;
}

RootCountPrediction best_prediction(const Polynomial& p, double tol) {
    const auto all = all_criteria(p, tol);
    RootCountPrediction best;
    bool have = false;
    for (const auto& pred : all) {
        if (!pred.fired())
            continue;
        const auto key = std::make_tuple(strength(pred.kind), pred.count, pred.margin);
        if (!have || key > std::make_tuple(strength(best.kind), best.count, best.margin)) {
            best = pred;
            have = true;
        }
    }
    if (!have) {
        // Nothing fired: report the Lakatos margin as the closest miss at l = 0.
        best = all.front();
    }
    return best;
}

Coeff trig_form(const Polynomial& p, Coeff omega, double t) {
    const double sigma = std::arg(omega);
    const double n = p.degree();
    const Coeff z = std::polar(1.0, t);
    return std::polar(1.0, -0.5 * (sigma + n * t)) * evaluate(p, z);
}

PhaseDecomposition phase_decomposition(const Polynomial& p, int l, double tol) {
    const auto inv = require_self_inversive(p, tol);
    const int n = p.degree();
    require_pair_index(n, l);

    PhaseDecomposition dec;
    dec.sigma = std::arg(*inv.omega);
    for (const auto& a : p.coeffs()) {
        dec.phases.push_back(std::arg(a));
        dec.magnitudes.push_back(std::abs(a));
    }
    const double phi = dec.phases[static_cast<std::size_t>(n - l)];
    const int m = n - 2 * l;
    for (int j = 0; j <= m; ++j)
        dec.t_nodes.push_back((2.0 * std::numbers::pi * j + dec.sigma - 2.0 * phi) / m);
    return dec;
}

Localization trig_localize(const Polynomial& p, int l, double tol) {
    const auto inv = require_self_inversive(p, tol);
    require_pair_index(p.degree(), l);
    const auto gate = at_least_unchecked(p, l);
    if (!gate.fired())
        throw InvalidArgument("trig_localize needs the at-least criterion to hold at l = " + std::to_string(l));

    Localization loc;
    loc.phase = phase_decomposition(p, l, tol);

    const double floor = 1e-12 * p.abs_sum();
    std::vector<int> signs;
    for (double t : loc.phase.t_nodes) {
        const double r = trig_form(p, *inv.omega, t).real();
        if (std::abs(r) <= floor)
            throw DegenerateNode("trigonometric form vanishes at node t = " + std::to_string(t));
        signs.push_back(r > 0.0 ? 1 : -1);
    }

    loc.alternating = true;
    for (std::size_t j = 0; j + 1 < signs.size(); ++j) {
        loc.intervals.push_back({loc.phase.t_nodes[j], loc.phase.t_nodes[j + 1], signs[j], signs[j + 1]});
        if (signs[j] == signs[j + 1])
            loc.alternating = false;
    }
    return loc;
}

bool angle_in_interval(double theta, const LocalizationInterval& interval) noexcept {
    const double two_pi = 2.0 * std::numbers::pi;
    // shift theta to the first representative >= t_lo
    const double shifted = theta + two_pi * std::ceil((interval.t_lo - theta) / two_pi);
    return shifted > interval.t_lo && shifted < interval.t_hi;
}

}  // namespace circleroots
