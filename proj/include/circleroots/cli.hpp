#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "circleroots/config.hpp"

namespace circleroots::cli {

enum class OutputFormat { Json, Csv, Text };

enum ExitStatus : int {
    exit_verified = 0,
    exit_input_error = 1,
    exit_mismatch = 2,     // a prediction disagreed with the oracle
    exit_inconclusive = 3  // the oracle could not decide
};

struct RunConfig {
    double tol_detect = 1e-10;
    double tol_circle = 1e-8;
    double tol_annulus = 1e-4;
    std::uint64_t seed = 0;
    OutputFormat format = OutputFormat::Json;

    Tolerances tolerances() const;
};

// Full command line including argv[0]. CIRCLEROOTS_FORMAT sets the default
// output format; --format overrides it.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace circleroots::cli
