#pragma once

#include <span>
#include <string>
#include <string_view>

#include <json.hpp>

#include "circleroots/bethe.hpp"
#include "circleroots/criteria.hpp"
#include "circleroots/error.hpp"
#include "circleroots/inversive.hpp"
#include "circleroots/oracle.hpp"
#include "circleroots/polynomial.hpp"
#include "circleroots/salem.hpp"

// JSON / CSV encodings of the library's values, and the inline coefficient
// syntax accepted by the command line.
namespace circleroots::io {

using Json = nlohmann::ordered_json;

class ParseError : public InvalidArgument {
  public:
    ParseError(const std::string& what, std::size_t position)
        : InvalidArgument(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

  private:
    std::size_t position_;
};

// One complex literal: "3", "-2.5", "2i", "-i", "1+2i", "1.5e-3-4i".
Coeff parse_complex(std::string_view text, std::size_t offset = 0);

// Comma-separated complex literals in ascending order.
Polynomial parse_coefficients(std::string_view text);

// {"coeffs": [[re, im], ...]}; a bare number is accepted for a real entry.
Polynomial polynomial_from_json(const Json& j);
Json to_json(const Polynomial& p);

Json to_json(const InversiveReport& r);
Json to_json(const RootCountPrediction& p);
Json to_json(const Localization& loc);
Json to_json(const RootClassification& cls);
Json to_json(const Verification& v);
Json to_json(const SalemReport& r);
Json to_json(const BetheSpec& spec);
Json to_json(const BetheRegimeReport& r);

BetheSpec bethe_spec_from_json(const Json& j);

// re,im,band per root (one row per unit of multiplicity).
std::string roots_csv(const RootClassification& cls);

// delta,regime,inside,on,outside,simple,min_root_gap
std::string sweep_csv(std::span<const SweepRow> rows);

// Shortest round-trip decimal form of a double.
std::string format_double(double x);

}  // namespace circleroots::io
