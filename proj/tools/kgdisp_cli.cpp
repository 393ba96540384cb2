// Command-line front end: loads a run configuration, applies flag overrides,
// runs the selected verification suites and writes the reports.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "kgdisp/errors.hpp"
#include "kgdisp/run_config.hpp"
#include "kgdisp/suite.hpp"

namespace {

constexpr int kExitConfigError = 2;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Klein-Gordon dispersive estimate verification suites"};

  std::string config_path;
  std::string suite, bands, taus, times, out, data;
  int dim = 0;
  std::size_t grid_n = 0;
  double box_length = 0.0, mass = -1.0;
  std::uint64_t seed = 0;

  app.add_option("--config", config_path, "INI file with [grid], [physics] and [run] sections");
  auto* o_suite = app.add_option("--suite", suite, "energy|sobolev|entoinfty|prop2|lowfreq|highfreq|interpolation|lp|partition|all");
  auto* o_dim = app.add_option("--dim", dim, "spatial dimension (1-3)");
  auto* o_n = app.add_option("--grid-n", grid_n, "points per axis (power of two)");
  auto* o_len = app.add_option("--box-length", box_length, "periodic box length L");
  auto* o_mass = app.add_option("--mass", mass, "mass m0");
  auto* o_bands = app.add_option("--bands", bands, "comma-separated frequency bands");
  auto* o_taus = app.add_option("--taus", taus, "comma-separated hyperboloid parameters");
  auto* o_times = app.add_option("--times", times, "time grid as start:end:step or a comma list");
  auto* o_seed = app.add_option("--seed", seed, "seed for randomized data samples");
  auto* o_out = app.add_option("--out", out, "output directory");
  auto* o_data = app.add_option("--data", data, "prop-mode data family: bump or zero");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitConfigError;
  }

  try {
    kgd::RunConfig cfg;
    if (!config_path.empty()) kgd::load_config_file(config_path, cfg);
    if (*o_suite) cfg.suite = suite;
    if (*o_dim) cfg.dim = dim;
    if (*o_n) cfg.grid_n = grid_n;
    if (*o_len) cfg.box_length = box_length;
    if (*o_mass) cfg.mass = mass;
    if (*o_bands) cfg.bands = kgd::parse_int_list(bands);
    if (*o_taus) cfg.taus = kgd::parse_real_list(taus);
    if (*o_times) cfg.times = kgd::parse_times(times);
    if (*o_seed) cfg.seed = seed;
    if (*o_out) cfg.out_dir = out;
    if (*o_data) cfg.data = data;

    const kgd::RunOutcome outcome = kgd::run_suite(cfg);
    for (const auto& [name, s] : outcome.summary["suites"].items()) {
      std::cout << name << ": " << s["status"].get<std::string>() << '\n';
    }
    std::cout << "summary written to " << cfg.out_dir << "/summary.json\n";
    return outcome.exit_code;
  } catch (const kgd::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const kgd::ContractError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const kgd::InvariantError& e) {
    std::cerr << "invariant failure: " << e.what() << '\n';
    return 1;
  }
}
