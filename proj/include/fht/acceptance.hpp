#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace fht {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

struct AcceptanceOptions {
  std::uint64_t seed = 20240611;
  /// Criteria to run; empty runs all fifteen.
  std::vector<int> only;
  /// Called after each criterion finishes.
  std::function<void(const CriterionResult&)> on_result;
};

/// Runs the acceptance criteria in ascending order. Every tolerance is a
/// named constant in the implementation.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts = {});

const std::vector<std::string>& criterion_names();

}  // namespace fht
