#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kgdisp/grid.hpp"

namespace kgd {

/// Everything a verification run depends on. Loaded from an INI-style file
/// (sections [grid], [physics], [run]) and then overridden by command-line flags.
struct RunConfig {
  int dim = 1;
  std::size_t grid_n = 4096;
  double box_length = 256.0;
  double mass = 1.0;
  /// Upper end M of the admissible mass range [0, M].
  double mass_bound = 1.0;
  std::vector<int> bands{0, 1, 2, 3, 4};
  std::vector<double> taus{2.0, 4.0, 8.0, 16.0};
  std::vector<double> times;  // defaults to 8:64:0.5
  double fit_lo = 8.0;
  double fit_hi = 64.0;
  std::uint64_t seed = 1;
  std::size_t samples = 10;
  std::string suite = "all";
  std::string data = "bump";  // bump | zero
  std::string out_dir = "kgdisp_out";
  /// Radius of the ball containing the prop-mode data at t0 = 2.
  double support_radius = 1.0;

  RunConfig();

  Grid grid() const;
  double max_time() const;
  /// Every violated constraint, one human-readable line each.
  std::vector<std::string> violations() const;
  /// Throws ConfigError listing all violations.
  void validate() const;
};

/// Suites accepted by run_suite, "all" included.
const std::vector<std::string>& known_suites();

/// Parse "a:b:step" (inclusive range) or "a,b,c".
std::vector<double> parse_times(const std::string& text);
std::vector<double> parse_real_list(const std::string& text);
std::vector<int> parse_int_list(const std::string& text);

/// Reads an INI file into `config`, keeping defaults for absent keys.
void load_config_file(const std::string& path, RunConfig& config);

}  // namespace kgd
