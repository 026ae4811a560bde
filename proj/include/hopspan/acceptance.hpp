#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace hopspan::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

struct Options {
  bool quick = false;          // reduced sweeps, for smoke runs
  std::ostream* log = nullptr;  // per-instance progress lines
};

/// Runs criteria 1-10 in order, reporting each result as soon as it is known.
std::vector<CriterionResult> run_all(const Options& opt,
                                     const std::function<void(const CriterionResult&)>& on_result = {});

std::string format(const CriterionResult& r);

}  // namespace hopspan::acceptance
