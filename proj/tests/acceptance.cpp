#include <iostream>

#include "mt/acceptance.hpp"

int main() {
  int failed = 0;
  for (const auto& r : mt::run_acceptance()) {
    std::cout << mt::format_criterion(r) << std::endl;
    failed += !r.pass;
  }
  std::cout << (failed ? "acceptance: " + std::to_string(failed) + " criteria failed" : "acceptance: all criteria pass")
            << std::endl;
  return failed ? 1 : 0;
}
