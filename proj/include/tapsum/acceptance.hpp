#pragma once

#include <string>
#include <vector>

#include "tapsum/stats.hpp"

namespace tapsum {

// One end-to-end verification criterion: a named bundle of checks that
// passes only when every check passes.
struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::vector<TestReport> checks;
  double seconds = 0.0;
};

inline constexpr int kCriterionCount = 10;

// Runs criterion id in [1, 10].  fast mode cuts replicate counts and
// widens Monte Carlo tolerances; every report records the thresholds used.
CriterionResult run_criterion(int id, bool fast = false);

// Criteria making up a named verification suite
// (moments | prop1 | t1 | t2 | coupling | limits); throws on unknown names.
std::vector<int> suite_criteria(const std::string& suite);

}  // namespace tapsum
