#pragma once

#include <optional>
#include <string>
#include <vector>

#include "framedef/report.hpp"

namespace framedef {

/// Grid restrictions and execution settings for a suite run.
struct RunOptions {
    unsigned cap = 6;
    std::optional<long long> lambda, mu, kappa;  // unset: both grid values 0 and 1
    std::optional<std::string> family;           // punkte1/punkte2 or bogen1/bogen2
    unsigned jobs = 1;
};

/// relation, delta, triangular, points, arcs, schnitt, groebner, bijektion, finite, all.
const std::vector<std::string>& suite_names();

/// Throws PreconditionViolation for an unknown suite, a parameter that is neither
/// 0 nor odd, a value outside {0, 1} for "all", or an unknown family.
void validate_options(const std::string& suite, const RunOptions& options);

/// Runs a suite; records come back sorted.
VerificationReport run_suite(const std::string& suite, const RunOptions& options);

}  // namespace framedef
