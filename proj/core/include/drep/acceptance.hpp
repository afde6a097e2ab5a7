/*
 * acceptance.hpp -- the reproduction suite: every top-level claim the
 * artifact certifies, one runnable criterion each, exact tolerances.
 */
#pragma once

#include <string>
#include <vector>

namespace drep {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::vector<std::string> details;
  double seconds = 0.0;
};

// Runs criterion `only` (1-based) or all when only == -1.
std::vector<CriterionResult> run_paper_suite(int only = -1, int jobs = 1);

std::string format_scoreboard(const std::vector<CriterionResult>& results);

}  // namespace drep
