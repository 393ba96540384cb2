#pragma once

#include <string>
#include <vector>

#include "kgdisp/report_io.hpp"
#include "kgdisp/run_config.hpp"

namespace kgd {

enum class Status { Pass, Fail, Skipped };

std::string to_string(Status s);

/// One checked property: `value` compared with `threshold`.
struct Invariant {
  std::string name;
  double value = 0.0;
  std::string relation;  // "<=", "<", ">=" or "finite"
  double threshold = 0.0;
  Status status = Status::Skipped;
};

struct SuiteResult {
  std::string name;
  std::string citation;
  std::vector<Invariant> invariants;
  Json results = Json::object();
  std::vector<DecayCurve> curves;

  Status status() const;
};

/// Runs one named suite (not "all") on a validated configuration.
SuiteResult run_single_suite(const std::string& name, const RunConfig& config);

struct RunOutcome {
  /// 0 when every invariant passed or was skipped, 1 otherwise.
  int exit_code = 0;
  Json summary;
};

/// Validates the configuration (ConfigError lists every violation), runs the
/// selected suites and writes summary.json plus one CSV and one SVG per decay
/// curve into config.out_dir.
RunOutcome run_suite(const RunConfig& config);

}  // namespace kgd
