#pragma once

#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

namespace circleroots {

using Coeff = std::complex<double>;

/**
 * Dense univariate polynomial with complex coefficients, stored in ascending
 * order: coeffs()[k] is the coefficient of z^k.
 *
 * Construction rejects non-finite coefficients and strips leading
 * coefficients that are negligible relative to the largest one, so that
 * degree() always refers to a nonzero leading coefficient. The only
 * exception is the zero polynomial, which has degree 0 and is_zero() true.
 * trimmed() records how many leading coefficients were dropped.
 */
class Polynomial {
  public:
    static constexpr double default_trim = 1e-14;

    Polynomial() : coeffs_{Coeff{0.0}} {}
    explicit Polynomial(std::vector<Coeff> coeffs, double trim_rel = default_trim);
    Polynomial(std::initializer_list<Coeff> coeffs) : Polynomial(std::vector<Coeff>(coeffs)) {}

    static Polynomial from_real(std::span<const double> coeffs);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    std::span<const Coeff> coeffs() const noexcept { return coeffs_; }
    const Coeff& operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
    const Coeff& leading() const noexcept { return coeffs_.back(); }

    bool is_zero() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == Coeff{0.0}; }
    int trimmed() const noexcept { return trimmed_; }

    double max_abs() const noexcept;
    // Sum of |a_k|; bounds |p(z)| on the unit circle.
    double abs_sum() const noexcept;

    Polynomial scaled(Coeff c) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) noexcept {
        return a.coeffs_ == b.coeffs_;
    }

  private:
    std::vector<Coeff> coeffs_;
    int trimmed_ = 0;
};

// Horner evaluation.
Coeff evaluate(const Polynomial& p, Coeff z) noexcept;

// sum_k |a_k| |z|^k, the running-error scale of evaluate(p, z).
double magnitude_bound(const Polynomial& p, double abs_z) noexcept;

// Every coefficient within tol of a real integer.
bool has_integer_coefficients(const Polynomial& p, double tol) noexcept;

// Formal derivative. A constant maps to the zero polynomial.
Polynomial derivative(const Polynomial& p);

// z^n conj(p)(1/z): coefficient k of the result is conj(a_{n-k}).
Polynomial conjugate_reciprocal(const Polynomial& p);

// q(z) = z^(n-1) conj(p')(1/z); coefficient j is (n-j) conj(a_{n-j}).
Polynomial cohn_transform(const Polynomial& p);

}  // namespace circleroots
