#include <cstdlib>
#include <cstring>
#include <iostream>

#include "boundfuel/app/acceptance.hpp"

// One line per criterion. Exit status is nonzero when any evaluated criterion fails.
int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) only = std::atoi(argv[++i]);
  bool all = true;
  for (int id = 1; id <= boundfuel::kCriterionCount; ++id) {
    if (only != 0 && id != only) continue;
    const auto r = boundfuel::evaluate_criterion(id);
    std::cout << boundfuel::format_criterion(r) << std::endl;
    all = all && r.pass;
  }
  return all ? 0 : 1;
}
