#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mt {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
  // Wall-clock budget; exceeding it fails the criterion.
  double budget = 0;
};

std::vector<CriterionResult> run_acceptance(std::uint64_t seed = 0);
// "PASS  3  semigroups ... (0.12 s)"
std::string format_criterion(const CriterionResult& r);

}  // namespace mt
