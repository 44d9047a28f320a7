#pragma once

#include <cstdint>
#include <optional>

#include "circleroots/polynomial.hpp"

namespace circleroots {

inline constexpr double default_detect_tol = 1e-10;

struct InversiveReport {
    bool is_self_inversive = false;
    std::optional<Coeff> omega;   // set iff is_self_inversive
    bool is_self_reciprocal = false;
    // max_k |a_{n-k} - omega conj(a_k)| / max_j |a_j|
    double max_residual = 0.0;
};

/**
 * Decide whether p(z) = omega z^n conj(p)(1/z) for some unimodular omega,
 * i.e. a_{n-k} = omega conj(a_k) for every k.
 *
 * omega is recovered from the k = 0 relation, omega = a_n / conj(a_0). When
 * a_0 = 0 the relation would force a_n = 0, so the verdict is false. The
 * reported omega is renormalized to modulus one.
 *
 * Throws InvalidArgument for degree 0 or tol <= 0.
 */
InversiveReport detect(const Polynomial& p, double tol = default_detect_tol);

/**
 * Seeded random self-inversive polynomial of degree n for the given omega.
 * Lower-half coefficients are standard complex normal; the upper half is
 * mirrored through a_{n-k} = omega conj(a_k) and, for even n, the middle
 * coefficient is sqrt(omega) times a real normal.
 */
Polynomial random_self_inversive(int n, Coeff omega, std::uint64_t seed);

}  // namespace circleroots
