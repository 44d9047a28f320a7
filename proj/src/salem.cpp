#include "circleroots/salem.hpp"

#include <cmath>

#include "circleroots/criteria.hpp"
#include "circleroots/error.hpp"
#include "circleroots/inversive.hpp"
#include "circleroots/oracle.hpp"

namespace circleroots {

SalemReport is_salem(const Polynomial& p, const Tolerances& tol) {
    SalemReport report;
    report.leading_coefficient = p.leading().real();
    const int n = p.degree();

    if (!has_integer_coefficients(p, tol.integer))
        report.reasons.emplace_back("non-integer coefficients");
    if (n < 2) {
        report.reasons.emplace_back("degree below 2");
        return report;
    }

    const auto inv = detect(p, tol.detect);
    if (!inv.is_self_inversive)
        report.reasons.emplace_back("not self-inversive");
    else if (!inv.is_self_reciprocal)
        report.reasons.emplace_back("omega != 1 (not self-reciprocal)");

    RootClassification cls;
    try {
        cls = find_roots(p, tol);
    } catch (const OracleFailure& e) {
        report.inconclusive = true;
        report.reasons.emplace_back(std::string("oracle failed: ") + e.what());
        return report;
    }

    std::vector<Coeff> off;
    for (const auto& r : cls.roots)
        if (r.band != Band::OnCircle)
            for (int k = 0; k < r.multiplicity; ++k)
                off.push_back(r.value);

    if (off.size() != 2) {
        report.reasons.emplace_back(std::to_string(off.size()) + " off-circle roots (expected 2)");
    } else {
        const bool real = std::abs(off[0].imag()) <= tol.salem_pair * std::max(1.0, std::abs(off[0])) &&
                          std::abs(off[1].imag()) <= tol.salem_pair * std::max(1.0, std::abs(off[1]));
        if (!real)
            report.reasons.emplace_back("off-circle pair is not real");
        else if (!(off[0].real() > 0.0 && off[1].real() > 0.0))
            report.reasons.emplace_back("off-circle pair is not positive");
        if (std::abs(off[0] * off[1] - 1.0) > tol.salem_pair)
            report.reasons.emplace_back("off-circle pair is not reciprocal");
        if (report.reasons.empty())
            report.salem_number = std::max(off[0].real(), off[1].real());
    }

    report.is_salem = report.reasons.empty();
    return report;
}

std::pair<Polynomial, SalemReport> boost_to_salem(const Polynomial& seed, const Tolerances& tol) {
    const int n = seed.degree();
    if (n < 3)
        throw InvalidArgument("boost_to_salem needs degree >= 3");
    if (!has_integer_coefficients(seed, tol.integer))
        throw InvalidArgument("boost_to_salem needs integer coefficients");
    if (!detect(seed, tol.detect).is_self_reciprocal)
        throw InvalidArgument("boost_to_salem needs a self-reciprocal seed");

    if (salem_criterion(seed, tol.detect).fired())
        return {seed, is_salem(seed, tol)};

    double rest = 0.0;
    for (int k = 0; k <= n; ++k)
        if (k != 1 && k != n - 1)
            rest += std::abs(seed[k]);
    const double rhs = 0.5 * (static_cast<double>(n) / (n - 2)) * rest;

    // smallest integer strictly above rhs; the current |a_{n-1}| <= rhs here
    const double m = std::floor(rhs) + 1.0;
    const double sign = seed[n - 1].real() < 0.0 ? -1.0 : 1.0;

    std::vector<Coeff> c(seed.coeffs().begin(), seed.coeffs().end());
    for (auto& a : c)
        a = Coeff{std::round(a.real()), 0.0};
    c[1] = sign * m;
    c[static_cast<std::size_t>(n - 1)] = sign * m;
    Polynomial boosted(std::move(c));
    return {boosted, is_salem(boosted, tol)};
}

}  // namespace circleroots
