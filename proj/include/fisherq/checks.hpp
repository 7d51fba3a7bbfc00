#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fisherq/oracle.hpp"

namespace fisherq {

struct CheckResult {
  std::string name;
  bool passed;
  double value;      // worst residual / deviation observed
  double tolerance;  // threshold it was held to
};

/// Closed-form identities on `samples` random points each, plus the
/// wavefunction-level identities on reference solver states.
std::vector<CheckResult> run_identity_checks(const SolverConfig& config = {},
                                             std::uint64_t seed = 20240601,
                                             int samples = 100);

/// Inference and reference-solver values against the tabulated grid.
std::vector<CheckResult> run_table_checks(const SolverConfig& config = {});

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace fisherq
