#include "circleroots/bethe.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "circleroots/error.hpp"

namespace circleroots {

std::string_view to_string(BetheRegime regime) noexcept {
    switch (regime) {
        case BetheRegime::AllOnCircleSimple: return "AllOnCircleSimple";
        case BetheRegime::TwoOffCircle: return "TwoOffCircle";
        case BetheRegime::Indeterminate: break;
    }
    return "Indeterminate";
}

Coeff BetheSpec::omega() const {
    if (omega_override)
        return *omega_override;
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(a) / static_cast<double>(n));
}

namespace {

void validate(const BetheSpec& spec) {
    if (spec.n < 3)
        throw InvalidArgument("Bethe polynomial needs n >= 3");
    if (!std::isfinite(spec.delta))
        throw InvalidArgument("delta must be finite");
    if (spec.omega_override) {
        if (std::abs(std::abs(*spec.omega_override) - 1.0) > 1e-12)
            throw InvalidArgument("omega override must be unimodular");
    } else if (spec.a < 1 || spec.a > spec.n) {
        throw InvalidArgument("a must lie in [1, n]");
    }
    if (!spec.omega_override && 2 * spec.a == spec.n)
        throw InvalidArgument("a = n/2 gives omega_a = -1 and a vanishing leading coefficient");
    if (std::abs(spec.omega() + 1.0) < 1e-12)
        throw InvalidArgument("omega = -1 gives a vanishing leading coefficient");
}

}  // namespace

Polynomial bethe_polynomial(const BetheSpec& spec) {
    validate(spec);
    const Coeff w = spec.omega();
    std::vector<Coeff> c(static_cast<std::size_t>(spec.n + 1), Coeff{0.0});
    c.front() = w + 1.0;
    c.back() = w + 1.0;
    c[1] += -2.0 * spec.delta;
    c[static_cast<std::size_t>(spec.n - 1)] += -2.0 * w * spec.delta;
    return Polynomial(std::move(c));
}

namespace {

BetheRegimeReport thresholds(const BetheSpec& spec) {
    const Coeff w = spec.omega();
    const double n = spec.n;
    BetheRegimeReport report;
    report.threshold_lo = std::abs(0.5 * (w + 1.0));
    report.threshold_hi = n / (n - 2.0) * report.threshold_lo;
    const double d = std::abs(spec.delta);
    if (d < report.threshold_lo)
        report.regime = BetheRegime::AllOnCircleSimple;
    else if (d > report.threshold_hi)
        report.regime = BetheRegime::TwoOffCircle;
    return report;
}

}  // namespace

BetheRegimeReport classify_regime(const BetheSpec& spec, const Tolerances& tol) {
    const Polynomial p = bethe_polynomial(spec);
    const Coeff w = spec.omega();
    auto report = thresholds(spec);
    report.classification = find_roots(p, tol);
    if (report.regime == BetheRegime::TwoOffCircle) {
        std::vector<Coeff> off;
        for (const auto& r : report.classification->roots)
            if (r.band != Band::OnCircle)
                for (int k = 0; k < r.multiplicity; ++k)
                    off.push_back(r.value);
        if (off.size() == 2) {
            // order as (s, w/s) with |s| > 1
            if (std::abs(off[0]) < std::abs(off[1]))
                std::swap(off[0], off[1]);
            report.off_pair = std::make_pair(off[0], off[1]);
            report.pair_product_error = std::abs(off[0] * off[1] - w);
        }
    }
    return report;
}

std::vector<SweepRow> sweep(int n, int a, std::span<const double> delta_grid, const Tolerances& tol) {
    std::vector<SweepRow> rows;
    rows.reserve(delta_grid.size());
    for (double delta : delta_grid) {
        if (!std::isfinite(delta))
            throw InvalidArgument("sweep grid values must be finite");
        SweepRow row;
        row.delta = delta;
        const BetheSpec spec{n, a, delta, std::nullopt};
        try {
            const auto report = classify_regime(spec, tol);
            row.regime = report.regime;
            const auto& cls = *report.classification;
            row.counts = cls.counts;
            row.simple = simplicity_check(bethe_polynomial(spec), cls, tol);
            row.min_root_gap = min_root_gap(cls);
            row.ok = true;
        } catch (const OracleFailure& e) {
            row.regime = thresholds(spec).regime;
            row.error = e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace circleroots
