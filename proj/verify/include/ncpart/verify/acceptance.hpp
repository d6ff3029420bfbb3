#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace ncpart::verify {

enum class Scale { Full, Reduced };

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  std::vector<Check> checks;
  double seconds = 0.0;

  bool pass() const;
};

inline constexpr int kCriterionCount = 10;

/// Runs one acceptance criterion (1..10). Exceptions become failed checks.
CriterionResult run_criterion(int id, Scale scale);

/// "PASS 3 asymptotic counts (0.1 s)" followed by indented check lines when verbose.
void print_result(std::ostream& out, const CriterionResult& r, bool verbose);

/// Runs every criterion, printing as it goes; true when all pass.
bool run_all(std::ostream& out, Scale scale, bool verbose);

}  // namespace ncpart::verify
