#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace commsplit {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double seconds = 0.0;
  std::string detail;  // failure explanation or summary counts
};

/// Runs the full acceptance suite in order. When `progress` is given, one
/// PASS/FAIL line per criterion is streamed as it completes.
std::vector<CriterionResult> run_acceptance(std::ostream* progress = nullptr);

void print_result_line(std::ostream& out, const CriterionResult& result);

}  // namespace commsplit
