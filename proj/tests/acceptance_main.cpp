// Acceptance runner: one pass/fail line per criterion; exit 0 iff all pass.
#include "drep/acceptance.hpp"

#include <cstdio>
#include <cstring>
#include <string>

int main(int argc, char** argv) {
  int only = -1;
  int jobs = 2;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--criterion") && i + 1 < argc)
      only = std::atoi(argv[++i]);
    else if (!std::strcmp(argv[i], "--jobs") && i + 1 < argc)
      jobs = std::atoi(argv[++i]);
  }
  auto results = drep::run_paper_suite(only, jobs);
  std::fputs(drep::format_scoreboard(results).c_str(), stdout);
  for (const auto& r : results)
    if (!r.pass) return 1;
  return 0;
}
