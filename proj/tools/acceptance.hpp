#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace graphfair::tools {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;  // failure witness, or a short summary statistic
  double seconds = 0;
};

// Runs the full acceptance suite in order. When `progress` is non-null every
// result is printed as soon as it is known, one line per criterion.
std::vector<CriterionResult> run_acceptance(std::ostream* progress);

void print_criterion(const CriterionResult& result, std::ostream& out);

struct RatioRow {
  std::string family;    // graph family
  std::string regime;    // agent and good counts the bound applies to
  std::string bound;     // closed-form connectivity ratio (or lower bound)
  std::string witness;   // catalog instance attaining the bound
  std::string computed;  // exact ratio of the witness instance
  bool match = false;
};

// Connectivity-ratio summary (two-agent families plus star and path rows),
// each row validated by recomputing the witness instance's exact ratio.
std::vector<RatioRow> ratio_table();

void print_ratio_table(const std::vector<RatioRow>& rows, std::ostream& out);

}  // namespace graphfair::tools
