#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "circleroots/error.hpp"
#include "circleroots/kernels.hpp"
#include "circleroots/oracle.hpp"

namespace circleroots {

namespace {

constexpr int max_refine_depth = 48;

class PhaseTracker {
  public:
    PhaseTracker(const Polynomial& p, double radius, double floor) : p_(p), radius_(radius), floor_(floor) {}

    Coeff sample(double theta) const {
        const Coeff v = evaluate(p_, std::polar(radius_, theta));
        check(v, theta);
        return v;
    }

    void check(Coeff v, double theta) const {
        if (!(std::abs(v) > floor_))
            throw ContourTooClose("|p| vanishes on the contour |z| = " + std::to_string(radius_) +
                                  " near angle " + std::to_string(theta));
    }

    // Argument increment of p from theta_a to theta_b, bisecting until every
    // piece turns by less than pi/2.
    double arc(double ta, Coeff va, double tb, Coeff vb, int depth) const {
        const double d = std::arg(vb / va);
        if (std::abs(d) < 0.5 * std::numbers::pi)
            return d;
        if (depth >= max_refine_depth)
            throw ContourTooClose("phase tracking did not resolve near angle " + std::to_string(ta));
        const double tm = 0.5 * (ta + tb);
        const Coeff vm = sample(tm);
        return arc(ta, va, tm, vm, depth + 1) + arc(tm, vm, tb, vb, depth + 1);
    }

  private:
    const Polynomial& p_;
    double radius_;
    double floor_;
};

}  // namespace

int winding_count(const Polynomial& p, double radius, const Tolerances& tol) {
    if (!(radius > 0.0) || !std::isfinite(radius))
        throw InvalidArgument("winding_count needs a positive radius");
    if (p.is_zero())
        throw InvalidArgument("winding_count of the zero polynomial");
    const int n = p.degree();
    if (n == 0)
        return 0;

    const std::size_t samples = static_cast<std::size_t>(std::max(64, 16 * n));
    const double step = 2.0 * std::numbers::pi / static_cast<double>(samples);
    std::vector<Coeff> z(samples + 1), v(samples + 1);
    for (std::size_t i = 0; i <= samples; ++i)
        z[i] = std::polar(radius, step * static_cast<double>(i));
    z[samples] = z[0];
    kernels::evaluate_batch(p.coeffs(), z, v);

    const PhaseTracker tracker(p, radius, tol.contour_floor * magnitude_bound(p, radius));
    for (std::size_t i = 0; i <= samples; ++i)
        tracker.check(v[i], step * static_cast<double>(i));

    double total = 0.0;
    for (std::size_t i = 0; i < samples; ++i)
        total += tracker.arc(step * static_cast<double>(i), v[i], step * static_cast<double>(i + 1), v[i + 1], 0);

    const double turns = total / (2.0 * std::numbers::pi);
    const double rounded = std::round(turns);
    if (std::abs(turns - rounded) > 0.25)
        throw ContourTooClose("phase tracking did not close: " + std::to_string(turns) + " turns");
    return static_cast<int>(rounded);
}

bool guard_band_occupied(const RootClassification& cls, double annulus) noexcept {
    for (const auto& r : cls.roots) {
        const double d = std::abs(std::abs(r.value) - 1.0);
        if (d > 0.5 * annulus && d < 2.0 * annulus)
            return true;
    }
    return false;
}

bool band_ambiguous(const RootClassification& cls, double annulus) noexcept {
    for (const auto& r : cls.roots) {
        const double d = std::abs(std::abs(r.value) - 1.0);
        if (d > cls.tol_circle && d <= 0.5 * annulus)
            return true;
    }
    return false;
}

int count_on_circle(const Polynomial& p, const RootClassification& cls, const Tolerances& tol) {
    if (!(tol.annulus > 0.0) || tol.annulus >= 0.5)
        throw InvalidArgument("annulus half-width must lie in (0, 0.5)");
    if (guard_band_occupied(cls, tol.annulus))
        throw ContourTooClose("a root lies in the guard band around the annulus contours");
    return winding_count(p, 1.0 + tol.annulus, tol) - winding_count(p, 1.0 - tol.annulus, tol);
}

int count_on_circle(const Polynomial& p, const Tolerances& tol) {
    return count_on_circle(p, find_roots(p, tol), tol);
}

}  // namespace circleroots
