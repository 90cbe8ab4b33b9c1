#pragma once

// Property suite behind `skeinrep check`.

#include <string>
#include <vector>

#include "skeinrep/engine.hpp"

namespace skeinrep {

struct CheckOptions {
  int r = 5;
  int max_genus = 1;
  int depth = 6;
  int samples = 60;
  EvalOptions eval;
};

enum class CheckStatus { Pass, Fail, Skip };

struct CheckResult {
  std::string module;
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
  double seconds = 0;

  bool passed() const { return status != CheckStatus::Fail; }
};

std::vector<CheckResult> run_check_suite(const CheckOptions& opt);

/// text: one line per check; csv: module,name,status,detail; json: array.
std::string render_check_results(const std::vector<CheckResult>& results, const std::string& format,
                                 bool with_timing = false);

}  // namespace skeinrep
