#pragma once

#include <string>
#include <vector>

namespace pgd {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0; // 0: no time limit
};

inline constexpr int kCriterionCount = 10;

/// Runs one acceptance criterion against the fixture corpus in `fixture_dir`.
CriterionResult run_criterion(int id, const std::string& fixture_dir, int jobs = 1);
std::vector<CriterionResult> run_acceptance(const std::string& fixture_dir, int jobs = 1);

/// "PASS [ 1] title (0.12 s)" followed by indented detail lines.
std::string format_result(const CriterionResult& r);

} // namespace pgd
