#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "circleroots/config.hpp"
#include "circleroots/polynomial.hpp"

namespace circleroots {

/**
 * Salem certification in the sense used here: integer coefficients,
 * self-reciprocal, every root on the unit circle except one pair of
 * positive reals r > 1 and 1/r. Irreducibility and monicity are not
 * required; the leading coefficient is reported.
 */
struct SalemReport {
    bool is_salem = false;
    std::optional<double> salem_number;
    std::vector<std::string> reasons;  // one entry per failed clause
    bool inconclusive = false;         // the oracle failed
    double leading_coefficient = 0.0;
};

SalemReport is_salem(const Polynomial& p, const Tolerances& tol = {});

/**
 * Replace a_1 and a_{n-1} by the smallest integer m >= |a_{n-1}| (sign of
 * a_{n-1} kept, + for zero) that makes the l = 1 criterion hold strictly.
 * A seed that already satisfies it is returned unchanged.
 *
 * Throws InvalidArgument unless the seed has integer coefficients, is
 * self-reciprocal and has degree >= 3.
 */
std::pair<Polynomial, SalemReport> boost_to_salem(const Polynomial& seed, const Tolerances& tol = {});

}  // namespace circleroots
