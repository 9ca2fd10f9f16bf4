#pragma once

#include <string>
#include <vector>

namespace boundfuel {

struct CriterionResult {
  int id;
  std::string name;
  bool pass;
  std::string detail;
};

constexpr int kCriterionCount = 13;

/// Evaluates one acceptance criterion (1-based). Tolerances are fixed in code.
CriterionResult evaluate_criterion(int id);
std::vector<CriterionResult> evaluate_all();

/// "[PASS] c01 <name>: <detail>"
std::string format_criterion(const CriterionResult& r);

// Randomized property suites behind criterion 13; each returns the number of failing instances.
struct PropertyReport {
  std::string name;
  int instances;
  int failures;
  std::string worst;
};
std::vector<PropertyReport> run_property_suites(int instances, unsigned long long seed);

}  // namespace boundfuel
