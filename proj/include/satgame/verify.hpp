#pragma once

#include <string>
#include <vector>

namespace satgame {

struct CheckRow {
  std::string criterion;
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Criterion keys of the "paper" verification suite (the published closed
/// forms and strategy guarantees), in order.
std::vector<std::string> paper_suite_criteria();

/// Runs one criterion; every solver value is computed fresh (no fixtures).
std::vector<CheckRow> run_paper_criterion(const std::string& criterion);

/// Runs all criteria whose key contains `filter` (all when empty).
std::vector<CheckRow> run_paper_suite(const std::string& filter = "");

}  // namespace satgame
