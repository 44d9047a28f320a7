#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "circleroots/polynomial.hpp"

namespace circleroots {

// Precondition violations: bad degree, bad index, non-finite data.
class InvalidArgument : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// A criterion was asked to analyze a polynomial that fails detect().
class NotSelfInversive : public InvalidArgument {
  public:
    using InvalidArgument::InvalidArgument;
};

// The simultaneous iteration did not meet its stopping rule within the
// iteration budget. Carries the last iterate so callers can inspect it.
class OracleFailure : public std::runtime_error {
  public:
    OracleFailure(const std::string& what, std::vector<Coeff> best_iterate, double residual)
        : std::runtime_error(what), best_iterate_(std::move(best_iterate)), residual_(residual) {}

    const std::vector<Coeff>& best_iterate() const noexcept { return best_iterate_; }
    double residual() const noexcept { return residual_; }

  private:
    std::vector<Coeff> best_iterate_;
    double residual_;
};

// A contour passes too close to a root for the phase to be tracked, or a
// guard band around a contour is occupied.
class ContourTooClose : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// A localization node coincides with a root of the trigonometric form.
class DegenerateNode : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace circleroots
