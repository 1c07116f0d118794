#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace leafcoh {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

/// "repcore", "leafdiff", "blocksolve", "cohomology", "sobolev"; "all" runs each.
const std::vector<std::string>& suite_names();

/// Runs a seeded invariant suite. Throws DomainError for an unknown name.
std::vector<CheckResult> run_suite(const std::string& name, std::uint64_t seed);

}  // namespace leafcoh
