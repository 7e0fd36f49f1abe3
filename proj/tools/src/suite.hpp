#pragma once

// The acceptance criteria as runnable checks. Shared by `supergroup selftest` and the
// acceptance test binary.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "report.hpp"
#include "supergroup/series.hpp"

namespace supergroup::tools {

struct SuiteOptions {
  Precision prec;
  std::uint64_t seed = 42;
  unsigned jobs = 1;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  std::string tolerance;  // pinned acceptance threshold, human readable
  bool pass = false;
  bool truncation = false;  // a series hit the truncation cap
  std::string detail;
  Json data;               // deterministic payload
  double seconds = 0;      // wall time, not part of the deterministic payload
  double time_limit = 0;   // seconds allowed by the criterion
};

/// Titles of criteria 1..13, in order.
const std::vector<std::string>& criterion_names();

/// Runs one criterion. Exceptions are caught and reported as failures.
CriterionResult run_criterion(int id, const SuiteOptions& options);

/// Runs every criterion in order; `progress` is called after each one.
std::vector<CriterionResult> run_suite(const SuiteOptions& options,
                                       const std::function<void(const CriterionResult&)>& progress = {});

/// Deterministic JSON form of a criterion (no timings).
Json criterion_json(const CriterionResult& r);

}  // namespace supergroup::tools
