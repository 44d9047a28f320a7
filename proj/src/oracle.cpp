#include "circleroots/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>

#include "circleroots/error.hpp"
#include "circleroots/kernels.hpp"

namespace circleroots {

std::string_view to_string(Band band) noexcept {
    switch (band) {
        case Band::Inside: return "inside";
        case Band::OnCircle: return "on";
        case Band::Outside: return "outside";
    }
    return "unknown";
}

std::string_view to_string(ClauseStatus status) noexcept {
    switch (status) {
        case ClauseStatus::Pass: return "pass";
        case ClauseStatus::Fail: return "fail";
        case ClauseStatus::Inconclusive: break;
    }
    return "inconclusive";
}

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();

struct AberthResult {
    std::vector<Coeff> roots;
    int iterations = 0;
};

// Monic-normalized coefficients b (degree m >= 2, b_0 != 0).
AberthResult aberth(std::span<const Coeff> b, const Tolerances& tol) {
    const std::size_t m = b.size() - 1;
    const double rho = std::pow(std::abs(b[0]) / std::abs(b[m]), 1.0 / static_cast<double>(m));

    std::mt19937_64 rng(tol.seed);
    std::uniform_real_distribution<double> jitter(-0.1, 0.1);
    const double step = 2.0 * std::numbers::pi / static_cast<double>(m);

    std::vector<Coeff> z(m), next(m), value(m), deriv(m);
    std::vector<double> bound(m);
    std::vector<char> done(m, 0);
    for (std::size_t i = 0; i < m; ++i)
        z[i] = std::polar(rho, step * (static_cast<double>(i) + 0.5 + jitter(rng)));

    const double stop = 8.0 * static_cast<double>(m) * eps;
    for (int iter = 1; iter <= tol.max_iterations; ++iter) {
        kernels::evaluate_with_derivative(b, z, value, deriv, bound);
        bool all_done = true;
        for (std::size_t i = 0; i < m; ++i) {
            next[i] = z[i];
            if (done[i])
                continue;
            if (std::abs(value[i]) <= stop * bound[i]) {
                done[i] = 1;
                continue;
            }
            all_done = false;
            if (deriv[i] == Coeff{0.0}) {
                // stationary point of p: nudge off it
                next[i] = z[i] * Coeff{1.0, 1e-3} + Coeff{1e-3, 0.0};
                continue;
            }
            const Coeff newton = value[i] / deriv[i];
            Coeff repulsion{0.0};
            for (std::size_t j = 0; j < m; ++j) {
                if (j == i)
                    continue;
                const Coeff diff = z[i] - z[j];
                if (diff != Coeff{0.0})
                    repulsion += 1.0 / diff;
            }
            const Coeff w = newton / (1.0 - newton * repulsion);
            next[i] = z[i] - w;
            if (std::abs(w) <= 4.0 * eps * std::abs(z[i]))
                done[i] = 1;
        }
        if (all_done)
            return {z, iter};
        std::swap(z, next);
    }

    kernels::evaluate_with_derivative(b, z, value, deriv, bound);
    double worst = 0.0;
    for (std::size_t i = 0; i < m; ++i)
        if (bound[i] > 0.0)
            worst = std::max(worst, std::abs(value[i]) / bound[i]);
    throw OracleFailure("root iteration did not converge in " + std::to_string(tol.max_iterations) +
                            " sweeps",
                        z, worst);
}

// Newton on `f` from `start`, keeping only steps that reduce |f|.
Coeff polish(const Polynomial& f, Coeff start, int steps) {
    const Polynomial df = derivative(f);
    Coeff x = start;
    double fx = std::abs(evaluate(f, x));
    for (int s = 0; s < steps && fx > 0.0; ++s) {
        const Coeff d = evaluate(df, x);
        if (d == Coeff{0.0})
            break;
        const Coeff candidate = x - evaluate(f, x) / d;
        const double fc = std::abs(evaluate(f, candidate));
        if (!(fc < fx))
            break;
        x = candidate;
        fx = fc;
    }
    return x;
}

Polynomial nth_derivative(Polynomial p, int order) {
    for (int i = 0; i < order; ++i)
        p = derivative(p);
    return p;
}

std::size_t find_set(std::vector<std::size_t>& parent, std::size_t i) {
    while (parent[i] != i) {
        parent[i] = parent[parent[i]];
        i = parent[i];
    }
    return i;
}

Band band_of(Coeff r, double tol_circle) {
    const double d = std::abs(r) - 1.0;
    if (std::abs(d) <= tol_circle)
        return Band::OnCircle;
    return d < 0.0 ? Band::Inside : Band::Outside;
}

}  // namespace

RootClassification find_roots(const Polynomial& p, const Tolerances& tol) {
    const int n = p.degree();
    if (n < 1)
        throw InvalidArgument("find_roots needs degree >= 1");

    int zeros = 0;
    while (p[zeros] == Coeff{0.0})
        ++zeros;

    std::vector<Coeff> b(p.coeffs().begin() + zeros, p.coeffs().end());
    const Coeff lead = b.back();
    for (auto& c : b)
        c /= lead;
    const Polynomial reduced(b, 0.0);
    const int m = reduced.degree();

    RootClassification cls;
    cls.tol_circle = tol.circle;

    std::vector<Coeff> raw;
    if (m == 1) {
        raw.push_back(-b[0] / b[1]);
    } else if (m >= 2) {
        auto result = aberth(b, tol);
        raw = std::move(result.roots);
        cls.iterations = result.iterations;
    }

    // cluster
    std::vector<std::size_t> parent(raw.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    for (std::size_t i = 0; i < raw.size(); ++i)
        for (std::size_t j = i + 1; j < raw.size(); ++j)
            if (std::abs(raw[i] - raw[j]) <= tol.cluster * std::max(1.0, std::abs(raw[i])))
                parent[find_set(parent, j)] = find_set(parent, i);

    std::vector<std::vector<std::size_t>> clusters(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i)
        clusters[find_set(parent, i)].push_back(i);

    for (const auto& members : clusters) {
        if (members.empty())
            continue;
        Coeff center{0.0};
        for (auto i : members)
            center += raw[i];
        center /= static_cast<double>(members.size());
        const int mult = static_cast<int>(members.size());
        const Polynomial target = mult == 1 ? reduced : nth_derivative(reduced, mult - 1);
        cls.roots.push_back({polish(target, center, mult == 1 ? 3 : 5), mult, Band::Inside});
    }
    if (zeros > 0)
        cls.roots.push_back({Coeff{0.0}, zeros, Band::Inside});

    for (auto& r : cls.roots) {
        r.band = band_of(r.value, tol.circle);
        switch (r.band) {
            case Band::Inside: cls.counts.inside += r.multiplicity; break;
            case Band::OnCircle: cls.counts.on += r.multiplicity; break;
            case Band::Outside: cls.counts.outside += r.multiplicity; break;
        }
        const double scale = magnitude_bound(p, std::abs(r.value));
        if (scale > 0.0)
            cls.residual = std::max(cls.residual, std::abs(evaluate(p, r.value)) / scale);
    }

    std::sort(cls.roots.begin(), cls.roots.end(), [](const Root& x, const Root& y) {
        const double ax = std::arg(x.value), ay = std::arg(y.value);
        if (ax != ay)
            return ax < ay;
        return std::abs(x.value) < std::abs(y.value);
    });
    return cls;
}

bool simplicity_check(const Polynomial& p, const RootClassification& cls, const Tolerances& tol) {
    const Polynomial dp = derivative(p);
    std::vector<Coeff> on;
    for (const auto& r : cls.roots) {
        if (r.band != Band::OnCircle)
            continue;
        if (r.multiplicity != 1)
            return false;
        const double scale = magnitude_bound(dp, std::abs(r.value));
        if (!(std::abs(evaluate(dp, r.value)) > tol.simple * scale))
            return false;
        on.push_back(r.value);
    }
    for (std::size_t i = 0; i < on.size(); ++i)
        for (std::size_t j = i + 1; j < on.size(); ++j)
            if (std::abs(on[i] - on[j]) <= tol.cluster * std::max(1.0, std::abs(on[i])))
                return false;
    return true;
}

namespace {

double min_gap(const RootClassification& cls, bool on_circle_only) {
    std::vector<Coeff> pts;
    for (const auto& r : cls.roots) {
        if (on_circle_only && r.band != Band::OnCircle)
            continue;
        if (r.multiplicity > 1)
            return 0.0;
        pts.push_back(r.value);
    }
    double gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            gap = std::min(gap, std::abs(pts[i] - pts[j]));
    return gap;
}

}  // namespace

double min_on_circle_gap(const RootClassification& cls) noexcept { return min_gap(cls, true); }

double min_root_gap(const RootClassification& cls) noexcept { return min_gap(cls, false); }

Verification verify_prediction(const Polynomial& p, const RootCountPrediction& pred, const Tolerances& tol) {
    Verification v;
    try {
        v.classification = find_roots(p, tol);
        v.has_classification = true;
    } catch (const OracleFailure& e) {
        v.clauses.push_back({"count", ClauseStatus::Inconclusive, e.what()});
        v.clauses.push_back({"cohn", ClauseStatus::Inconclusive, e.what()});
        v.overall = ClauseStatus::Inconclusive;
        return v;
    }
    const auto& cls = v.classification;
    const auto& counts = cls.counts;

    if (pred.fired()) {
        Clause clause{"count", ClauseStatus::Pass, ""};
        const int on = counts.on;
        bool ok = false;
        switch (pred.kind) {
            case PredictionKind::ExactOnCircle:
            case PredictionKind::AllOnCircle:
                ok = on == pred.count && counts.inside == pred.l && counts.outside == pred.l;
                break;
            case PredictionKind::AtLeastOnCircle: ok = on >= pred.count; break;
            case PredictionKind::NoneOnCircle: ok = on == 0; break;
            case PredictionKind::NoPrediction: ok = true; break;
        }
        clause.detail = "on=" + std::to_string(on) + " inside=" + std::to_string(counts.inside) +
                        " outside=" + std::to_string(counts.outside) + " predicted " +
                        std::string(to_string(pred.kind)) + "(" + std::to_string(pred.count) + ")";
        clause.status = ok ? ClauseStatus::Pass : ClauseStatus::Fail;

        if (!guard_band_occupied(cls, tol.annulus) && !band_ambiguous(cls, tol.annulus)) {
            try {
                const int annulus = count_on_circle(p, cls, tol);
                clause.detail += " annulus=" + std::to_string(annulus);
                if (annulus != on && clause.status == ClauseStatus::Pass)
                    clause.status = ClauseStatus::Inconclusive;
            } catch (const ContourTooClose& e) {
                clause.detail += std::string(" annulus unavailable: ") + e.what();
            }
        } else {
            clause.detail += " annulus skipped (roots near contour)";
        }
        v.clauses.push_back(std::move(clause));
    }

    if (pred.fired() && pred.simple && pred.kind != PredictionKind::NoneOnCircle) {
        const bool simple = simplicity_check(p, cls, tol);
        v.clauses.push_back({"simple", simple ? ClauseStatus::Pass : ClauseStatus::Fail,
                             "min on-circle gap " + std::to_string(min_on_circle_gap(cls))});
    }

    {
        Clause clause{"cohn", ClauseStatus::Pass, ""};
        try {
            const Polynomial q = cohn_transform(p);
            const int q_inside = q.degree() >= 1 ? find_roots(q, tol).counts.inside : 0;
            clause.status = q_inside == counts.inside ? ClauseStatus::Pass : ClauseStatus::Fail;
            clause.detail = "inside p=" + std::to_string(counts.inside) + " q=" + std::to_string(q_inside);
        } catch (const OracleFailure& e) {
            clause.status = ClauseStatus::Inconclusive;
            clause.detail = e.what();
        }
        v.clauses.push_back(std::move(clause));
    }

    v.overall = ClauseStatus::Pass;
    for (const auto& c : v.clauses) {
        if (c.status == ClauseStatus::Fail) {
            v.overall = ClauseStatus::Fail;
            break;
        }
        if (c.status == ClauseStatus::Inconclusive)
            v.overall = ClauseStatus::Inconclusive;
    }
    return v;
}

}  // namespace circleroots
