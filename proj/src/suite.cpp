#include "kgdisp/suite.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <random>

#include "kgdisp/data_family.hpp"
#include "kgdisp/decay.hpp"
#include "kgdisp/errors.hpp"
#include "kgdisp/hyperboloid.hpp"
#include "kgdisp/littlewood_paley.hpp"
#include "kgdisp/partition.hpp"
#include "kgdisp/spectral.hpp"

namespace kgd {

namespace {

Invariant check(std::string name, double value, const std::string& relation, double threshold) {
  Invariant inv{std::move(name), value, relation, threshold, Status::Fail};
  bool ok = std::isfinite(value);
  if (relation == "<=") ok = ok && value <= threshold;
  if (relation == "<") ok = ok && value < threshold;
  if (relation == ">=") ok = ok && value >= threshold;
  inv.status = ok ? Status::Pass : Status::Fail;
  return inv;
}

Invariant skipped(std::string name) { return {std::move(name), 0.0, "skipped", 0.0, Status::Skipped}; }

Json to_json(const Invariant& inv) {
  Json j;
  j["name"] = inv.name;
  j["value"] = std::isfinite(inv.value) ? Json(inv.value) : Json(nullptr);
  j["relation"] = inv.relation;
  j["threshold"] = inv.threshold;
  j["status"] = to_string(inv.status);
  return j;
}

// max/min of positive values; 1 for an empty list, infinity if any entry is not positive.
double spread(const std::vector<double>& v) {
  if (v.empty()) return 1.0;
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  if (!(*lo > 0.0)) return INFINITY;
  return *hi / *lo;
}

std::vector<double> times_above(const std::vector<double>& times, double t0) {
  std::vector<double> out;
  for (double t : times) {
    if (t > t0) out.push_back(t);
  }
  return out;
}

CauchyData prop_data(const RunConfig& c, const Grid& grid) {
  if (c.data == "zero") return {Field(grid), Field(grid), 2.0, c.mass};
  return canonical_bump_data(grid, c.mass);
}

bool is_zero_data(const RunConfig& c) { return c.data == "zero"; }

Point origin() { return {0.0, 0.0, 0.0}; }

// ---------------------------------------------------------------- energy
SuiteResult suite_energy(const RunConfig& c) {
  SuiteResult r{"energy", "hyperboloidal weighted energy identity for compactly supported data", {}, Json::object(), {}};
  const Grid grid = c.grid();
  const CauchyData data = prop_data(c, grid);
  const Propagator prop(data);
  Json rows = Json::array();
  for (double tau : c.taus) {
    const EnergyReport e = energy(prop, tau, c.support_radius);
    Json row;
    row["tau"] = tau;
    row["energy"] = e.energy;
    row["flat_energy"] = e.flat_energy;
    row["components"] = {e.components[0], e.components[1], e.components[2]};
    row["relative_error"] = e.relative_error();
    rows.push_back(row);
    const std::string tag = "tau=" + std::to_string(tau);
    r.invariants.push_back(check("equality " + tag, e.relative_error(), "<=", 1e-4));
    const double cmin = std::min({e.components[0], e.components[1], e.components[2]});
    r.invariants.push_back(check("components nonnegative " + tag, cmin, ">=", 0.0));
    r.invariants.push_back(
        check("energy below flat energy " + tag, e.energy - e.flat_energy, "<=", 1e-4 * e.flat_energy));
  }
  r.results["slices"] = rows;
  return r;
}

// ---------------------------------------------------------------- sobolev
SuiteResult suite_sobolev(const RunConfig& c) {
  SuiteResult r{"sobolev", "global Sobolev inequality on hyperboloidal slices with tau-independent constant", {}, Json::object(), {}};
  const Grid grid = c.grid();
  const CauchyData data = prop_data(c, grid);
  for (int ell : {0, 1}) {
    Json rows = Json::array();
    std::vector<double> ratios;
    for (double tau : c.taus) {
      const SobolevCheck s = global_sobolev_check(data, tau, ell);
      rows.push_back({{"tau", tau}, {"lhs", s.lhs}, {"rhs", s.rhs}, {"ratio", s.ratio}});
      ratios.push_back(s.ratio);
      r.invariants.push_back(check("ratio finite ell=" + std::to_string(ell) + " tau=" + std::to_string(tau),
                                   s.ratio, "finite", 0.0));
    }
    r.results["ell=" + std::to_string(ell)] = rows;
    if (is_zero_data(c)) {
      r.invariants.push_back(skipped("tau spread ell=" + std::to_string(ell)));
    } else {
      r.invariants.push_back(check("tau spread ell=" + std::to_string(ell), spread(ratios), "<", 4.0));
    }
  }
  return r;
}

// ---------------------------------------------------------------- entoinfty
SuiteResult suite_entoinfty(const RunConfig& c) {
  SuiteResult r{"entoinfty", "pointwise weighted bounds controlled by higher-order hyperboloidal energies", {}, Json::object(), {}};
  const Grid grid = c.grid();
  const CauchyData data = prop_data(c, grid);
  Json rows = Json::array();
  std::vector<double> ratios;
  for (double tau : c.taus) {
    const EntoinftyCheck e = entoinfty_check(data, tau);
    rows.push_back({{"tau", tau},
                    {"lhs_terms", {e.lhs_terms[0], e.lhs_terms[1], e.lhs_terms[2]}},
                    {"rhs_energy_sum", e.rhs_energy_sum},
                    {"ratio", e.ratio}});
    ratios.push_back(e.ratio);
    r.invariants.push_back(check("ratio finite tau=" + std::to_string(tau), e.ratio, "finite", 0.0));
  }
  r.results["slices"] = rows;
  if (is_zero_data(c)) {
    r.invariants.push_back(skipped("tau spread"));
  } else {
    r.invariants.push_back(check("tau spread", spread(ratios), "<", 4.0));
  }
  return r;
}

// ---------------------------------------------------------------- prop2
SuiteResult suite_prop2(const RunConfig& c) {
  SuiteResult r{"prop2", "pointwise decay for compactly supported data prescribed at t = 2", {}, Json::object(), {}};
  const Grid grid = c.grid();
  const CauchyData data = prop_data(c, grid);
  const auto times = times_above(c.times, 2.0);
  const int d = grid.dim();
  Json runs = Json::array();
  std::vector<double> constants;
  for (double factor : {1.0, 0.5}) {
    CauchyData run = data;
    run.mass = c.mass * factor;
    const Prop2Report p = prop2_decay_check(run, times, c.fit_lo, c.fit_hi);
    Json j = kgd::to_json(p.report);
    if (p.report.fitted) {
      j["fit_dphi_dt"] = kgd::to_json(p.fit_dphi_dt);
      j["fit_grad"] = kgd::to_json(p.fit_grad);
    }
    runs.push_back(j);
    constants.push_back(p.report.empirical_constant);
    if (factor == 1.0) {
      DecayCurve curve = p.report.curve;
      curve.label = "prop2";
      r.curves.push_back(curve);
      if (p.report.skipped || !p.report.fitted || run.mass == 0.0) {
        r.invariants.push_back(skipped("sup|phi| exponent"));
      } else {
        r.invariants.push_back(check("sup|phi| exponent distance to -d/2",
                                     std::abs(p.report.fit.slope + 0.5 * d), "<=", 0.1));
      }
    }
    r.invariants.push_back(check("constant finite m=" + std::to_string(run.mass),
                                 p.report.empirical_constant, "finite", 0.0));
  }
  r.results["runs"] = runs;
  return r;
}

// ---------------------------------------------------------------- lowfreq
SuiteResult suite_lowfreq(const RunConfig& c) {
  SuiteResult r{"lowfreq", "low-frequency dispersive estimate with data at t = 0", {}, Json::object(), {}};
  const Grid grid = c.grid();
  const int d = grid.dim();
  const auto times = times_above(c.times, 0.0);
  const Field f = is_zero_data(c) ? Field(grid) : bump(grid, origin(), 1.0);
  const LowFreqResult main = lowfreq_check(f, Field(grid), c.mass, times, c.fit_lo, c.fit_hi);
  r.results["reference"] = {{"phi", kgd::to_json(main.phi)}, {"dphi", kgd::to_json(main.dphi)}};
  DecayCurve curve = main.phi.curve;
  curve.label = "lowfreq_reference";
  r.curves.push_back(curve);
  if (main.phi.skipped || !main.phi.fitted || c.mass == 0.0) {
    r.invariants.push_back(skipped("m0 sup|P_-1 phi| exponent"));
  } else {
    r.invariants.push_back(check("m0 sup|P_-1 phi| exponent distance to -d/2",
                                 std::abs(main.phi.fit.slope + 0.5 * d), "<=", 0.1));
  }

  if (is_zero_data(c) || c.mass == 0.0) {
    r.invariants.push_back(skipped("constant spread over samples"));
    return r;
  }
  const auto samples = random_bump_samples(d, c.samples, c.seed, 0.3, 1.0, 3.0);
  Json rows = Json::array();
  std::vector<double> constants;
  for (std::size_t s = 0; s < samples.size(); ++s) {
    const CauchyData data = make_bump_data(grid, samples[s], 0.0, c.mass);
    const LowFreqResult lf = lowfreq_check(data.f, data.g, c.mass, times, c.fit_lo, c.fit_hi);
    Json row;
    row["sample"] = s;
    row["center"] = std::vector<double>(samples[s].center.begin(), samples[s].center.begin() + d);
    row["radius"] = samples[s].radius;
    row["velocity"] = to_string(samples[s].velocity);
    row["phi"] = kgd::to_json(lf.phi);
    row["dphi"] = kgd::to_json(lf.dphi);
    rows.push_back(row);
    constants.push_back(lf.phi.empirical_constant);
    DecayCurve sc = lf.phi.curve;
    sc.label = "lowfreq_sample" + std::to_string(s);
    r.curves.push_back(sc);
  }
  r.results["samples"] = rows;
  r.invariants.push_back(check("constant spread over samples", spread(constants), "<", 3.0));
  return r;
}

// ---------------------------------------------------------------- highfreq
SuiteResult suite_highfreq(const RunConfig& c) {
  SuiteResult r{"highfreq", "high-frequency band estimates for the solution and its derivatives", {}, Json::object(), {}};
  const Grid grid = c.grid();
  const auto times = times_above(c.times, 2.0);
  const Field src = is_zero_data(c) ? Field(grid) : point_source(grid);
  const Field zero(grid);
  Json rows = Json::array();
  std::vector<double> hf;
  std::vector<double> wd;
  std::vector<double> raw_phi;
  std::vector<double> raw_dphi;
  bool any_skipped = false;
  for (int k : c.bands) {
    const HighFreqResult h = highfreq_check(src, zero, c.mass, k, times);
    Json row;
    row["band"] = k;
    row["phi"] = kgd::to_json(h.phi);
    row["dphi"] = kgd::to_json(h.dphi);
    Json masses = Json::array();
    std::vector<double> wd_masses{h.dphi.empirical_constant};
    for (double factor : {0.25, 0.0625}) {
      const HighFreqResult hm = highfreq_check(src, zero, c.mass * factor, k, times);
      masses.push_back({{"mass", c.mass * factor}, {"wavedecay_constant", hm.dphi.empirical_constant}});
      wd_masses.push_back(hm.dphi.empirical_constant);
    }
    row["vanishing_mass"] = masses;
    rows.push_back(row);
    any_skipped = any_skipped || h.phi.skipped;
    hf.push_back(h.phi.empirical_constant);
    wd.push_back(h.dphi.empirical_constant);
    raw_phi.push_back(h.phi.unnormalized_constant);
    raw_dphi.push_back(h.dphi.unnormalized_constant);
    DecayCurve a = h.phi.curve;
    a.label = "highfreq_k" + std::to_string(k);
    DecayCurve b = h.dphi.curve;
    b.label = "wavedecay_k" + std::to_string(k);
    r.curves.push_back(a);
    r.curves.push_back(b);
    if (h.dphi.skipped) {
      r.invariants.push_back(skipped("wavedecay mass spread k=" + std::to_string(k)));
    } else {
      r.invariants.push_back(check("wavedecay mass spread k=" + std::to_string(k), spread(wd_masses), "<", 2.0));
    }
  }
  r.results["bands"] = rows;
  if (any_skipped || c.mass == 0.0) {
    r.invariants.push_back(skipped("normalized highfreq constant spread over bands"));
  } else {
    r.invariants.push_back(check("normalized highfreq constant spread over bands", spread(hf), "<", 8.0));
  }
  if (any_skipped) {
    r.invariants.push_back(skipped("normalized wavedecay constant spread over bands"));
  } else {
    r.invariants.push_back(check("normalized wavedecay constant spread over bands", spread(wd), "<", 8.0));
  }
  if (c.bands.size() >= 2 && !any_skipped) {
    std::vector<double> ks(c.bands.begin(), c.bands.end());
    auto slope = [&](const std::vector<double>& v) {
      double mk = 0, mv = 0;
      for (std::size_t i = 0; i < v.size(); ++i) {
        mk += ks[i];
        mv += std::log2(v[i]);
      }
      mk /= ks.size();
      mv /= ks.size();
      double sxx = 0, sxy = 0;
      for (std::size_t i = 0; i < v.size(); ++i) {
        sxx += (ks[i] - mk) * (ks[i] - mk);
        sxy += (ks[i] - mk) * (std::log2(v[i]) - mv);
      }
      return sxx > 0 ? sxy / sxx : 0.0;
    };
    r.results["unnormalized_slope_phi"] = slope(raw_phi);
    r.results["unnormalized_slope_dphi"] = slope(raw_dphi);
  }
  return r;
}

// ---------------------------------------------------------------- interpolation
SuiteResult suite_interpolation(const RunConfig& c) {
  SuiteResult r{"interpolation", "interpolated decay and regularity trade-off for band-limited data", {}, Json::object(), {}};
  const Grid grid = c.grid();
  const int d = grid.dim();
  // Theorem-mode times are the prop-mode times shifted by the prescription time,
  // so the s = d/2 endpoint samples the same instants as the band estimate.
  std::vector<double> times;
  for (double t : times_above(c.times, 2.0)) times.push_back(t - 2.0);
  const std::vector<double> prop_times = times_above(c.times, 2.0);
  const Field src = is_zero_data(c) ? Field(grid) : point_source(grid);
  const Field zero(grid);
  std::vector<double> exponents;
  for (int j = 0; j < 5; ++j) exponents.push_back(0.5 * (d - 1) + 0.5 * j / 4.0);

  Json rows = Json::array();
  for (int k : c.bands) {
    const auto reps = interpolation_check(src, zero, c.mass, k, exponents, times);
    const DecayReport implied = wavedecay_implied_check(src, zero, c.mass, k, times);
    const HighFreqResult hf = highfreq_check(src, zero, c.mass, k, prop_times);
    Json row;
    row["band"] = k;
    Json family = Json::array();
    for (const auto& rep : reps) {
      family.push_back({{"s", rep.s}, {"constant", rep.empirical_constant}, {"status", rep.skipped ? "skipped" : "evaluated"}});
      r.invariants.push_back(check("constant finite k=" + std::to_string(k) + " s=" + std::to_string(rep.s),
                                   rep.empirical_constant, "finite", 0.0));
    }
    row["family"] = family;
    row["wavedecay_implied_constant"] = implied.empirical_constant;
    row["highfreq_constant"] = hf.phi.empirical_constant;
    const std::string tag = " k=" + std::to_string(k);
    if (reps.front().skipped) {
      r.invariants.push_back(skipped("endpoint s=(d-1)/2 vs wavedecay-implied" + tag));
      r.invariants.push_back(skipped("endpoint s=d/2 vs highfreq/m0" + tag));
    } else {
      const double lo_ratio = implied.empirical_constant / reps.front().empirical_constant;
      row["ratio_lower_endpoint"] = lo_ratio;
      r.invariants.push_back(check("endpoint s=(d-1)/2 vs wavedecay-implied factor" + tag,
                                   std::max(lo_ratio, 1.0 / lo_ratio), "<=", 2.0));
      if (c.mass > 0.0) {
        const double hi_ratio = hf.phi.empirical_constant / c.mass / reps.back().empirical_constant;
        row["ratio_upper_endpoint"] = hi_ratio;
        r.invariants.push_back(check("endpoint s=d/2 vs highfreq/m0 factor" + tag,
                                     std::max(hi_ratio, 1.0 / hi_ratio), "<=", 2.0));
      } else {
        r.invariants.push_back(skipped("endpoint s=d/2 vs highfreq/m0" + tag));
      }
    }
    for (const auto& rep : reps) {
      DecayCurve cv = rep.curve;
      cv.label = "interpolation_k" + std::to_string(k) + "_s" + std::to_string(static_cast<int>(std::lround(rep.s * 1000)));
      r.curves.push_back(cv);
    }
    rows.push_back(row);
  }
  r.results["bands"] = rows;
  return r;
}

// ---------------------------------------------------------------- lp
SuiteResult suite_lp(const RunConfig& c) {
  SuiteResult r{"lp", "Littlewood-Paley decomposition completeness and band separation", {}, Json::object(), {}};
  const Grid grid = c.grid();
  const LPBank bank(grid);
  const double residual = bank.completeness_residual();
  r.results["k_max"] = bank.k_max();
  r.results["completeness_residual"] = residual;
  r.invariants.push_back(check("symbol completeness", residual, "<=", 1e-10));

  double smin = 1.0, smax = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double rr = grid.frequency_norm(i);
    for (int k = -1; k <= bank.k_max(); ++k) {
      const double s = bank.symbol(k, rr);
      smin = std::min(smin, s);
      smax = std::max(smax, s);
    }
  }
  r.invariants.push_back(check("symbols >= 0", smin, ">=", 0.0));
  r.invariants.push_back(check("symbols <= 1", smax, "<=", 1.0));

  // Random smooth field: a few bumps with seeded centers and radii.
  std::mt19937_64 rng(c.seed);
  std::uniform_real_distribution<double> shift(-0.25 * grid.box_length(), 0.25 * grid.box_length());
  std::uniform_real_distribution<double> rad(0.5, 3.0);
  Field f(grid);
  for (int j = 0; j < 4; ++j) {
    Point ctr{0.0, 0.0, 0.0};
    for (int a = 0; a < grid.dim(); ++a) ctr[a] = shift(rng);
    f += bump(grid, ctr, rad(rng), 1.0 + j);
  }
  const SpectralField spec = forward_transform(f);
  Field sum(grid);
  std::vector<Field> parts;
  for (int k = -1; k <= bank.k_max(); ++k) {
    parts.push_back(inverse_transform(bank.project(spec, k)));
    sum += parts.back();
  }
  const double recon = norm_linf(sum - f) / norm_linf(f);
  r.results["reconstruction_error"] = recon;
  r.invariants.push_back(check("sum of projections reproduces f", recon, "<=", 1e-10));

  double leak = 0.0;
  for (int k = -1; k <= bank.k_max(); ++k) {
    for (int j = -1; j <= bank.k_max(); ++j) {
      if (std::abs(k - j) < 2) continue;
      const Field pkj = bank.project(parts[static_cast<std::size_t>(j + 1)], k);
      leak = std::max(leak, norm_l2(pkj) / norm_l2(f));
    }
  }
  r.results["band_separation_leak"] = leak;
  r.invariants.push_back(check("P_k P_j f vanishes for |k-j| >= 2", leak, "<=", 1e-12));
  return r;
}

// ---------------------------------------------------------------- partition
SuiteResult suite_partition(const RunConfig& c) {
  SuiteResult r{"partition", "lattice partition of unity and localized W^{k,1} comparability", {}, Json::object(), {}};
  const Grid grid = c.grid();
  const int d = grid.dim();
  const double half_box = 0.5 * grid.box_length();
  const double active = std::min(d == 1 ? 16.0 : 4.0, std::floor(half_box - 1.0));
  if (active < 2.0) throw ConfigError("partition suite: box too small for an active region of half-width 2");
  const SpatialPartition p(grid, active);
  r.results["active_half_width"] = active;
  r.results["centers"] = p.centers().size();
  r.results["overlap_bound"] = p.overlap_bound();

  std::mt19937_64 rng(c.seed);
  std::uniform_real_distribution<double> coord(-active, active);
  double sum_err = 0.0;
  int max_overlap = 0;
  double support_violation = 0.0;
  for (int s = 0; s < 2000; ++s) {
    Point x{0.0, 0.0, 0.0};
    for (int a = 0; a < d; ++a) x[a] = coord(rng);
    double total = 0.0;
    for (std::size_t i = 0; i < p.centers().size(); ++i) {
      const double v = p.cutoff(i, x);
      total += v;
      double r2 = 0.0;
      for (int a = 0; a < d; ++a) r2 += (x[a] - p.centers()[i][a]) * (x[a] - p.centers()[i][a]);
      if (r2 >= 1.0) support_violation = std::max(support_violation, std::abs(v));
    }
    sum_err = std::max(sum_err, std::abs(total - 1.0));
    max_overlap = std::max(max_overlap, p.overlap_count(x));
  }
  r.results["partition_sum_error"] = sum_err;
  r.results["max_overlap"] = max_overlap;
  r.invariants.push_back(check("sum of cutoffs equals 1", sum_err, "<=", 1e-12));
  r.invariants.push_back(check("cutoff support in unit ball", support_violation, "<=", 0.0));
  r.invariants.push_back(check("overlap count", max_overlap, "<=", static_cast<double>(p.overlap_bound())));

  Json bounds = Json::array();
  for (int k = 0; k <= d + 2; ++k) bounds.push_back(p.derivative_bound(k));
  r.results["derivative_bounds"] = bounds;

  const double radius = d == 1 ? 10.0 : 2.0;
  const double max_shift = 0.5 * (active - radius);
  std::uniform_real_distribution<double> shift(-max_shift, max_shift);
  Json rows = Json::array();
  double worst = 0.0;
  double lowest = INFINITY;
  double constant = 0.0;
  for (int s = 0; s < 20; ++s) {
    Point ctr{0.0, 0.0, 0.0};
    for (int a = 0; a < d; ++a) ctr[a] = shift(rng);
    const ComparabilityResult cr = w_k1_comparability(p, bump(grid, ctr, radius), 1);
    rows.push_back({{"translate", std::vector<double>(ctr.begin(), ctr.begin() + d)},
                    {"lhs", cr.lhs}, {"mid", cr.mid}, {"rhs", cr.rhs},
                    {"mid_ratio", cr.mid_ratio}, {"rhs_ratio", cr.rhs_ratio}});
    worst = std::max({worst, cr.mid_ratio, cr.rhs_ratio});
    lowest = std::min({lowest, cr.mid_ratio, cr.rhs_ratio});
    constant = cr.constant;
  }
  r.results["comparability_k1"] = rows;
  r.results["comparability_constant"] = constant;
  r.invariants.push_back(check("comparability ratios bounded by reported constant", worst, "<=", constant));
  r.invariants.push_back(check("comparability ratios at least 1", lowest, ">=", 1.0 - 1e-9));
  return r;
}

void write_curves(const SuiteResult& r, const std::filesystem::path& dir) {
  for (const DecayCurve& cv : r.curves) {
    if (cv.times.empty()) continue;
    write_csv((dir / (cv.label + ".csv")).string(), cv);
    write_svg((dir / (cv.label + ".svg")).string(), cv);
  }
}

Json config_json(const RunConfig& c) {
  Json j;
  j["dim"] = c.dim;
  j["grid_n"] = c.grid_n;
  j["box_length"] = c.box_length;
  j["mass"] = c.mass;
  j["mass_bound"] = c.mass_bound;
  j["support_radius"] = c.support_radius;
  j["bands"] = c.bands;
  j["taus"] = c.taus;
  j["times"] = {{"count", c.times.size()},
                {"first", c.times.empty() ? 0.0 : c.times.front()},
                {"last", c.times.empty() ? 0.0 : c.times.back()}};
  j["fit_window"] = {c.fit_lo, c.fit_hi};
  j["seed"] = c.seed;
  j["samples"] = c.samples;
  j["suite"] = c.suite;
  j["data"] = c.data;
  return j;
}

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "unknown";
}

Status SuiteResult::status() const {
  bool any_pass = false;
  for (const auto& inv : invariants) {
    if (inv.status == Status::Fail) return Status::Fail;
    any_pass = any_pass || inv.status == Status::Pass;
  }
  return any_pass ? Status::Pass : Status::Skipped;
}

SuiteResult run_single_suite(const std::string& name, const RunConfig& c) {
  if (name == "energy") return suite_energy(c);
  if (name == "sobolev") return suite_sobolev(c);
  if (name == "entoinfty") return suite_entoinfty(c);
  if (name == "prop2") return suite_prop2(c);
  if (name == "lowfreq") return suite_lowfreq(c);
  if (name == "highfreq") return suite_highfreq(c);
  if (name == "interpolation") return suite_interpolation(c);
  if (name == "lp") return suite_lp(c);
  if (name == "partition") return suite_partition(c);
  throw ConfigError("unknown suite '" + name + "'");
}

RunOutcome run_suite(const RunConfig& config) {
  config.validate();
  std::vector<std::string> names;
  if (config.suite == "all") {
    for (const auto& s : known_suites()) {
      if (s != "all") names.push_back(s);
    }
  } else {
    names.push_back(config.suite);
  }

  const std::filesystem::path dir(config.out_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw ConfigError("cannot create output directory '" + config.out_dir + "': " + ec.message());

  RunOutcome out;
  Json suites = Json::object();
  bool failed = false;
  for (const auto& name : names) {
    const SuiteResult r = run_single_suite(name, config);
    Json j;
    j["citation"] = r.citation;
    j["status"] = to_string(r.status());
    Json invs = Json::array();
    for (const auto& inv : r.invariants) invs.push_back(to_json(inv));
    j["invariants"] = invs;
    j["results"] = r.results;
    suites[name] = j;
    failed = failed || r.status() == Status::Fail;
    write_curves(r, dir);
  }
  out.exit_code = failed ? 1 : 0;
  out.summary["config"] = config_json(config);
  out.summary["suites"] = suites;
  out.summary["status"] = failed ? "fail" : "pass";
  write_json((dir / "summary.json").string(), out.summary);
  return out;
}

}  // namespace kgd
