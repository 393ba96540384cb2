#include "kgdisp/run_config.hpp"

#include <boost/algorithm/string.hpp>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "kgdisp/errors.hpp"
#include "kgdisp/littlewood_paley.hpp"

namespace kgd {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

double to_real(const std::string& s) {
  std::size_t pos = 0;
  const std::string t = boost::algorithm::trim_copy(s);
  double v = 0.0;
  try {
    v = std::stod(t, &pos);
  } catch (const std::exception&) {
    throw ConfigError("cannot parse number '" + s + "'");
  }
  if (pos != t.size()) throw ConfigError("cannot parse number '" + s + "'");
  return v;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> parts;
  boost::algorithm::split(parts, text, boost::algorithm::is_any_of(","));
  std::vector<std::string> out;
  for (auto& p : parts) {
    boost::algorithm::trim(p);
    if (!p.empty()) out.push_back(p);
  }
  return out;
}

}  // namespace

RunConfig::RunConfig() : times(parse_times("8:64:0.5")) {}

Grid RunConfig::grid() const { return Grid(dim, grid_n, box_length); }

double RunConfig::max_time() const {
  return times.empty() ? 0.0 : *std::max_element(times.begin(), times.end());
}

const std::vector<std::string>& known_suites() {
  static const std::vector<std::string> suites{"energy",   "sobolev",       "entoinfty",
                                               "prop2",    "lowfreq",       "highfreq",
                                               "interpolation", "lp",       "partition",
                                               "all"};
  return suites;
}

std::vector<std::string> RunConfig::violations() const {
  std::vector<std::string> v;
  if (dim < 1 || dim > 3) v.push_back("dim must be 1, 2 or 3 (got " + std::to_string(dim) + ")");
  if (grid_n < 2 || (grid_n & (grid_n - 1)) != 0) {
    v.push_back("grid-n must be a power of two >= 2 (got " + std::to_string(grid_n) + ")");
  }
  if (!(box_length > 0.0) || !std::isfinite(box_length)) v.push_back("box-length must be positive");
  if (!(mass_bound >= 0.0)) v.push_back("mass bound M must be >= 0");
  if (!(mass >= 0.0) || mass > mass_bound) {
    v.push_back("mass m0 = " + fmt(mass) + " must lie in [0, M] with M = " + fmt(mass_bound));
  }
  if (!(support_radius > 0.0)) v.push_back("support radius must be positive");
  if (times.empty()) v.push_back("time grid is empty");
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!std::isfinite(times[i]) || times[i] < 0.0) {
      v.push_back("times must be finite and >= 0");
      break;
    }
    if (i > 0 && times[i] <= times[i - 1]) {
      v.push_back("times must increase strictly");
      break;
    }
  }
  if (!(fit_lo > 0.0) || !(fit_hi > fit_lo)) v.push_back("fit window must satisfy 0 < lo < hi");
  if (samples == 0) v.push_back("samples must be >= 1");
  if (data != "bump" && data != "zero") v.push_back("data must be 'bump' or 'zero' (got '" + data + "')");
  if (std::find(known_suites().begin(), known_suites().end(), suite) == known_suites().end()) {
    v.push_back("unknown suite '" + suite + "'");
  }

  const double need = 2.0 * (support_radius + max_time() + 2.0);
  if (box_length < need) {
    v.push_back("anti-wraparound bound violated: box-length " + fmt(box_length) +
                " < 2 (support_radius + max(times) + 2) = " + fmt(need));
  }
  const bool grid_ok = dim >= 1 && dim <= 3 && grid_n >= 2 && (grid_n & (grid_n - 1)) == 0 &&
                       box_length > 0.0 && std::isfinite(box_length);
  if (grid_ok) {
    const int kmax = LPBank::k_max_for(Grid(dim, grid_n, box_length));
    for (int k : bands) {
      if (k < 0 || k > kmax) {
        v.push_back("band " + std::to_string(k) + " outside [0, " + std::to_string(kmax) +
                    "] (bands must lie below the grid Nyquist frequency)");
      }
    }
    // Data at t0 = 2 in B(0, rho) meet the slice inside |x| <= (tau^2 - c^2) / (2c), c = 2 - rho.
    const double c = 2.0 - support_radius;
    for (double tau : taus) {
      if (!(tau > 0.0)) {
        v.push_back("tau must be positive (got " + fmt(tau) + ")");
        continue;
      }
      if (c <= 0.0) continue;
      const double rs = (tau * tau - c * c) / (2.0 * c);
      if (rs > 0.5 * box_length) {
        v.push_back("tau = " + fmt(tau) + " needs slice support radius " + fmt(rs) +
                    " <= box-length / 2 = " + fmt(0.5 * box_length));
      }
    }
  }
  if (support_radius >= 2.0) v.push_back("support radius must be < 2 (the prescription time)");
  return v;
}

void RunConfig::validate() const {
  const auto v = violations();
  if (v.empty()) return;
  std::string msg = "invalid configuration:";
  for (const auto& line : v) msg += "\n  - " + line;
  throw ConfigError(msg);
}

std::vector<double> parse_times(const std::string& text) {
  const std::string t = boost::algorithm::trim_copy(text);
  if (t.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    boost::algorithm::split(parts, t, boost::algorithm::is_any_of(":"));
    if (parts.size() != 3) throw ConfigError("time range must be start:end:step (got '" + text + "')");
    const double a = to_real(parts[0]);
    const double b = to_real(parts[1]);
    const double s = to_real(parts[2]);
    if (!(s > 0.0) || b < a) throw ConfigError("time range needs step > 0 and end >= start");
    std::vector<double> out;
    for (long i = 0;; ++i) {
      const double v = a + static_cast<double>(i) * s;
      if (v > b + 1e-9 * s) break;
      out.push_back(v);
    }
    return out;
  }
  return parse_real_list(t);
}

std::vector<double> parse_real_list(const std::string& text) {
  std::vector<double> out;
  for (const auto& p : split_list(text)) out.push_back(to_real(p));
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (const auto& p : split_list(text)) {
    const double v = to_real(p);
    if (v != std::floor(v)) throw ConfigError("expected an integer, got '" + p + "'");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

void load_config_file(const std::string& path, RunConfig& c) {
  boost::property_tree::ptree tree;
  try {
    boost::property_tree::read_ini(path, tree);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw ConfigError("cannot read config file: " + std::string(e.what()));
  }
  auto get = [&](const char* key) { return tree.get_optional<std::string>(key); };
  if (auto v = get("grid.dim")) c.dim = static_cast<int>(to_real(*v));
  if (auto v = get("grid.n")) c.grid_n = static_cast<std::size_t>(to_real(*v));
  if (auto v = get("grid.box_length")) c.box_length = to_real(*v);
  if (auto v = get("physics.mass")) c.mass = to_real(*v);
  if (auto v = get("physics.mass_bound")) c.mass_bound = to_real(*v);
  if (auto v = get("physics.support_radius")) c.support_radius = to_real(*v);
  if (auto v = get("run.suite")) c.suite = boost::algorithm::trim_copy(*v);
  if (auto v = get("run.bands")) c.bands = parse_int_list(*v);
  if (auto v = get("run.taus")) c.taus = parse_real_list(*v);
  if (auto v = get("run.times")) c.times = parse_times(*v);
  if (auto v = get("run.fit_window")) {
    const auto w = parse_real_list(*v);
    if (w.size() != 2) throw ConfigError("fit_window must be 'lo, hi'");
    c.fit_lo = w[0];
    c.fit_hi = w[1];
  }
  if (auto v = get("run.seed")) c.seed = static_cast<std::uint64_t>(to_real(*v));
  if (auto v = get("run.samples")) c.samples = static_cast<std::size_t>(to_real(*v));
  if (auto v = get("run.data")) c.data = boost::algorithm::trim_copy(*v);
  if (auto v = get("run.out")) c.out_dir = boost::algorithm::trim_copy(*v);
}

}  // namespace kgd
