#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qcv/report.hpp"

namespace qcv {

inline const std::vector<std::string> kAllSuites = {
    "algebra", "group-pointwise", "group-integral", "sphere", "constants"};

struct SuiteConfig {
  int n = 2;
  std::vector<std::string> suites = kAllSuites;
  int degree = 4;
  int trials = 100;
  std::uint64_t samples = 100000;
  double fd_step = 1e-4;
  double tol = 1e-4;
  std::uint64_t seed = 7;
  std::string format = "json";
  int workers = 1;
  bool no_timestamp = false;
};

// Throws std::invalid_argument naming the offending field.
void validate_config(const SuiteConfig& cfg);

// Flat key=value file ('#' comments, blank lines allowed); unknown keys and
// malformed values are rejected with the key named in the message.
SuiteConfig parse_config_file(const std::string& path);

// Runs the selected suites in declaration order.  Check failures are
// recorded in the report, never thrown.  Identical (config, seed) yields an
// identical report regardless of worker count.
Report run_suites(const SuiteConfig& cfg);

}  // namespace qcv
