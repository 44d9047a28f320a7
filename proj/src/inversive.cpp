#include "circleroots/inversive.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "circleroots/error.hpp"

namespace circleroots {

InversiveReport detect(const Polynomial& p, double tol) {
    const int n = p.degree();
    if (n < 1)
        throw InvalidArgument("detect needs degree >= 1");
    if (!(tol > 0.0))
        throw InvalidArgument("detect tolerance must be positive");

    InversiveReport report;
    const Coeff a0 = p[0];
    const double scale = p.max_abs();
    if (a0 == Coeff{0.0}) {
        report.max_residual = std::abs(p.leading()) / scale;
        return report;
    }

    const Coeff omega = p.leading() / std::conj(a0);
    double worst = 0.0;
    for (int k = 0; k <= n; ++k)
        worst = std::max(worst, std::abs(p[n - k] - omega * std::conj(p[k])));
    report.max_residual = worst / scale;

    if (report.max_residual <= tol && std::abs(std::abs(omega) - 1.0) <= tol) {
        report.is_self_inversive = true;
        report.omega = omega / std::abs(omega);
        report.is_self_reciprocal = std::abs(*report.omega - 1.0) <= tol;
    }
    return report;
}

Polynomial random_self_inversive(int n, Coeff omega, std::uint64_t seed) {
    if (n < 1)
        throw InvalidArgument("random_self_inversive needs n >= 1");
    if (std::abs(std::abs(omega) - 1.0) > 1e-12)
        throw InvalidArgument("omega must lie on the unit circle");

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);

    std::vector<Coeff> a(static_cast<std::size_t>(n + 1));
    for (int k = 0; 2 * k < n; ++k) {
        Coeff c{normal(rng), normal(rng)};
        // a_n = omega conj(a_0) must stay clearly nonzero
        while (k == 0 && std::abs(c) < 1e-3)
            c = Coeff{normal(rng), normal(rng)};
        a[static_cast<std::size_t>(k)] = c;
        a[static_cast<std::size_t>(n - k)] = omega * std::conj(c);
    }
    if (n % 2 == 0)
        a[static_cast<std::size_t>(n / 2)] = std::sqrt(omega) * normal(rng);
    return Polynomial(std::move(a));
}

}  // namespace circleroots
