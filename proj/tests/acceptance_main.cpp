// Acceptance runner: executes one criterion (argv[1] in 1..10) or all of
// them, printing one pass/fail line per criterion.  Exit 0 iff every
// executed criterion passed.

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <vector>

#include "tapsum/acceptance.hpp"

int main(int argc, char** argv) {
  bool fast = false;
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--fast") == 0) {
      fast = true;
    } else {
      const int id = std::atoi(argv[i]);
      if (id < 1 || id > tapsum::kCriterionCount) {
        std::fprintf(stderr, "usage: %s [--fast] [criterion 1..10]...\n", argv[0]);
        return 2;
      }
      ids.push_back(id);
    }
  }
  if (ids.empty())
    for (int id = 1; id <= tapsum::kCriterionCount; ++id) ids.push_back(id);

  bool all_pass = true;
  for (int id : ids) {
    try {
      const tapsum::CriterionResult r = tapsum::run_criterion(id, fast);
      std::printf("criterion %2d [%s]: %s (%.1fs, %s)\n", r.id,
                  r.pass ? "PASS" : "FAIL", r.name.c_str(), r.seconds,
                  fast ? "fast" : "full");
      for (const auto& c : r.checks)
        std::printf("    %-40s %s  value=%.6g threshold=%.6g%s%s\n",
                    c.name.c_str(), c.pass ? "ok  " : "FAIL", c.value,
                    c.threshold, c.note.empty() ? "" : "  -- ",
                    c.note.c_str());
      all_pass = all_pass && r.pass;
    } catch (const std::exception& e) {
      std::printf("criterion %2d [FAIL]: exception: %s\n", id, e.what());
      all_pass = false;
    }
  }
  return all_pass ? 0 : 1;
}
