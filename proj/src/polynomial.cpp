#include "circleroots/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "circleroots/error.hpp"

namespace circleroots {

Polynomial::Polynomial(std::vector<Coeff> coeffs, double trim_rel) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
        throw InvalidArgument("polynomial needs at least one coefficient");
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (!std::isfinite(coeffs_[k].real()) || !std::isfinite(coeffs_[k].imag()))
            throw InvalidArgument("coefficient " + std::to_string(k) + " is not finite");
    }

    const double cutoff = trim_rel * max_abs();
    while (coeffs_.size() > 1 && std::abs(coeffs_.back()) <= cutoff) {
        coeffs_.pop_back();
        ++trimmed_;
    }
    if (coeffs_.size() == 1 && std::abs(coeffs_[0]) <= cutoff)
        coeffs_[0] = Coeff{0.0};
}

Polynomial Polynomial::from_real(std::span<const double> coeffs) {
    return Polynomial(std::vector<Coeff>(coeffs.begin(), coeffs.end()));
}

double Polynomial::max_abs() const noexcept {
    double m = 0.0;
    for (const auto& c : coeffs_)
        m = std::max(m, std::abs(c));
    return m;
}

double Polynomial::abs_sum() const noexcept {
    double s = 0.0;
    for (const auto& c : coeffs_)
        s += std::abs(c);
    return s;
}

Polynomial Polynomial::scaled(Coeff c) const {
    std::vector<Coeff> out(coeffs_);
    for (auto& a : out)
        a *= c;
    return Polynomial(std::move(out));
}

Coeff evaluate(const Polynomial& p, Coeff z) noexcept {
    const auto a = p.coeffs();
    Coeff y = a.back();
    for (int k = p.degree() - 1; k >= 0; --k)
        y = y * z + a[static_cast<std::size_t>(k)];
    return y;
}

double magnitude_bound(const Polynomial& p, double abs_z) noexcept {
    const auto a = p.coeffs();
    double y = std::abs(a.back());
    for (int k = p.degree() - 1; k >= 0; --k)
        y = y * abs_z + std::abs(a[static_cast<std::size_t>(k)]);
    return y;
}

bool has_integer_coefficients(const Polynomial& p, double tol) noexcept {
    return std::all_of(p.coeffs().begin(), p.coeffs().end(), [tol](const Coeff& c) {
        return std::abs(c.imag()) <= tol && std::abs(c.real() - std::round(c.real())) <= tol;
    });
}

Polynomial derivative(const Polynomial& p) {
    const int n = p.degree();
    if (n == 0)
        return Polynomial{};
    std::vector<Coeff> d(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k)
        d[static_cast<std::size_t>(k - 1)] = static_cast<double>(k) * p[k];
    return Polynomial(std::move(d));
}

Polynomial conjugate_reciprocal(const Polynomial& p) {
    const int n = p.degree();
    std::vector<Coeff> r(static_cast<std::size_t>(n + 1));
    for (int k = 0; k <= n; ++k)
        r[static_cast<std::size_t>(k)] = std::conj(p[n - k]);
    return Polynomial(std::move(r));
}

Polynomial cohn_transform(const Polynomial& p) {
    const int n = p.degree();
    if (n < 1)
        throw InvalidArgument("cohn_transform needs degree >= 1");
    std::vector<Coeff> q(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
        q[static_cast<std::size_t>(j)] = static_cast<double>(n - j) * std::conj(p[n - j]);
    return Polynomial(std::move(q));
}

}  // namespace circleroots
