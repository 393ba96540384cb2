#include "kgdisp/decay.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "kgdisp/errors.hpp"
#include "kgdisp/spectral.hpp"

namespace kgd {

namespace {

constexpr int kRefineSteps = 3;  // offsets j*h/4 for j = -3..3

// Largest value of `eval` over the refinement stencil around x_star.
double refine_max(const Grid& grid, const Point& x_star, double start,
                  const std::function<double(const Point&)>& eval) {
  const int d = grid.dim();
  const double step = 0.25 * grid.spacing();
  double best = start;
  int offs[kMaxDim] = {0, 0, 0};
  std::function<void(int)> rec = [&](int axis) {
    if (axis == d) {
      bool centre = true;
      Point x = x_star;
      for (int a = 0; a < d; ++a) {
        x[a] += offs[a] * step;
        centre = centre && offs[a] == 0;
      }
      if (!centre) best = std::max(best, eval(x));
      return;
    }
    for (int j = -kRefineSteps; j <= kRefineSteps; ++j) {
      offs[axis] = j;
      rec(axis + 1);
    }
  };
  rec(0);
  return best;
}

std::size_t argmax_abs(std::span<const double> v) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (std::abs(v[i]) > std::abs(v[best])) best = i;
  }
  return best;
}

double gradient_magnitude(const PointValue& p, int dim) {
  double s = p.dphi_dt * p.dphi_dt;
  for (int a = 0; a < dim; ++a) s += p.grad[a] * p.grad[a];
  return std::sqrt(s);
}

Field derivative_magnitude(const EvolvedState& st) {
  Field out(st.phi.grid());
  for (std::size_t i = 0; i < out.size(); ++i) {
    double s = st.dphi_dt[i] * st.dphi_dt[i];
    for (const Field& gf : st.grad_phi) s += gf[i] * gf[i];
    out[i] = std::sqrt(s);
  }
  return out;
}

void require_times(const std::vector<double>& times, double strictly_above, const char* who) {
  if (times.empty()) throw ContractError(std::string(who) + ": empty time grid");
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!std::isfinite(times[i]) || times[i] <= strictly_above) {
      throw ContractError(std::string(who) + ": times must exceed " + std::to_string(strictly_above));
    }
    if (i > 0 && times[i] <= times[i - 1]) {
      throw ContractError(std::string(who) + ": times must increase strictly");
    }
  }
}

void finish_constants(DecayReport& rep, double plain_norm) {
  rep.curve.validate();
  const double nrm = rep.curve.data_norm;
  if (nrm < kDegenerateNorm || plain_norm < kDegenerateNorm) {
    rep.skipped = true;
    return;
  }
  double worst = 0.0;
  for (double w : rep.curve.weighted_sup) worst = std::max(worst, w);
  rep.empirical_constant = worst / nrm;
  rep.unnormalized_constant = worst / plain_norm;
}

bool positive(const std::vector<double>& v, const std::vector<double>& t, double lo, double hi) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (t[i] < lo || t[i] > hi) continue;
    if (!(v[i] > 0.0)) return false;
    ++n;
  }
  return n >= 5;
}

double sobolev_squared(const Field& f, double s) {
  const double v = norm_sobolev_h(f, s);
  return v * v;
}

double l1_outside_unit_ball(const Field& f) {
  const Grid& g = f.grid();
  double s = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const Point x = g.position(i);
    double r2 = 0.0;
    for (int a = 0; a < g.dim(); ++a) r2 += x[a] * x[a];
    if (r2 > 1.0) s += std::abs(f[i]);
  }
  return s * g.cell_volume();
}

}  // namespace

void DecayCurve::validate() const {
  if (weighted_sup.size() != times.size() || raw_sup.size() != times.size()) {
    throw InvariantError("DecayCurve: column lengths differ");
  }
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (i > 0 && !(times[i] > times[i - 1])) throw InvariantError("DecayCurve: times not increasing");
    if (!std::isfinite(weighted_sup[i]) || weighted_sup[i] < 0.0 || !std::isfinite(raw_sup[i]) ||
        raw_sup[i] < 0.0) {
      throw InvariantError("DecayCurve: non-finite or negative value");
    }
  }
}

FitResult fit_exponent(const std::vector<double>& times, const std::vector<double>& values,
                       double t_lo, double t_hi) {
  if (times.size() != values.size()) throw ContractError("fit_exponent: length mismatch");
  std::vector<double> lx;
  std::vector<double> ly;
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (times[i] < t_lo || times[i] > t_hi) continue;
    if (!(times[i] > 0.0) || !(values[i] > 0.0)) {
      throw ContractError("fit_exponent: nonpositive value in fit window");
    }
    lx.push_back(std::log(times[i]));
    ly.push_back(std::log(values[i]));
  }
  if (lx.size() < 5) throw ContractError("fit_exponent: fewer than 5 points in fit window");
  const double n = static_cast<double>(lx.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  if (sxx == 0.0) throw ContractError("fit_exponent: window contains a single time");
  FitResult out;
  out.slope = sxy / sxx;
  out.intercept = my - out.slope * mx;
  double r = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    const double e = ly[i] - (out.intercept + out.slope * lx[i]);
    r += e * e;
  }
  out.residual = std::sqrt(r / n);
  out.points = lx.size();
  return out;
}

FitResult fit_exponent(const DecayCurve& curve, double t_lo, double t_hi) {
  return fit_exponent(curve.times, curve.raw_sup, t_lo, t_hi);
}

SupSample refined_sups(const Propagator& prop, double t) {
  const Grid& g = prop.grid();
  const EvolvedState st = prop.evolve(t);
  const Field dmag = derivative_magnitude(st);
  SupSample out;
  const std::size_t ip = argmax_abs(st.phi.values());
  const std::size_t id = argmax_abs(dmag.values());
  out.phi = std::abs(st.phi[ip]);
  out.dphi = dmag[id];
  if (out.phi > 0.0) {
    out.phi = refine_max(g, g.position(ip), out.phi,
                         [&](const Point& x) { return std::abs(prop.evaluate_at({t, x}).phi); });
  }
  if (out.dphi > 0.0) {
    out.dphi = refine_max(g, g.position(id), out.dphi, [&](const Point& x) {
      return gradient_magnitude(prop.evaluate_at({t, x}), g.dim());
    });
  }
  return out;
}

Prop2Report prop2_decay_check(const CauchyData& data, const std::vector<double>& times, double t_lo,
                              double t_hi) {
  data.validate();
  require_times(times, data.t0, "prop2_decay_check");
  const double total = norm_l1(data.f) + norm_l1(data.g);
  if (total > 0.0 && (l1_outside_unit_ball(data.f) + l1_outside_unit_ball(data.g)) > 1e-8 * total) {
    throw ConfigError("prop2_decay_check: data not supported in the unit ball");
  }
  const Grid& g = data.grid();
  const int d = g.dim();
  const double m2 = data.mass * data.mass;
  const int s_d = SobolevOrder::for_dimension(d).s_d;

  Prop2Report out;
  DecayReport& rep = out.report;
  rep.inequality_id = "prop2";
  rep.mass = data.mass;
  rep.dim = d;
  rep.t0 = data.t0;
  rep.curve.label = "prop2";
  rep.curve.data_norm = std::sqrt(sobolev_squared(data.f, s_d + 1) + sobolev_squared(data.g, s_d));

  const Propagator prop(data);
  std::vector<double> sup_dt;
  std::vector<double> sup_grad;
  for (double t : times) {
    const EvolvedState st = prop.evolve(t);
    const double p = norm_linf(st.phi);
    const double pt = norm_linf(st.dphi_dt);
    double pg = 0.0;
    for (std::size_t i = 0; i < st.phi.size(); ++i) {
      double s = 0.0;
      for (const Field& gf : st.grad_phi) s += gf[i] * gf[i];
      pg = std::max(pg, std::sqrt(s));
    }
    const double lhs = m2 * std::pow(t, d) * p * p + std::pow(t, d - 1) * (pt * pt + pg * pg);
    rep.curve.times.push_back(t);
    rep.curve.weighted_sup.push_back(std::sqrt(lhs));
    rep.curve.raw_sup.push_back(p);
    sup_dt.push_back(pt);
    sup_grad.push_back(pg);
  }
  finish_constants(rep, total);
  if (!rep.skipped && positive(rep.curve.raw_sup, times, t_lo, t_hi)) {
    rep.fit = fit_exponent(rep.curve, t_lo, t_hi);
    rep.fitted = true;
    if (positive(sup_dt, times, t_lo, t_hi)) out.fit_dphi_dt = fit_exponent(times, sup_dt, t_lo, t_hi);
    if (positive(sup_grad, times, t_lo, t_hi)) out.fit_grad = fit_exponent(times, sup_grad, t_lo, t_hi);
  }
  return out;
}

LowFreqResult lowfreq_check(const Field& f, const Field& g, double m0,
                            const std::vector<double>& times, double t_lo, double t_hi) {
  require_times(times, 0.0, "lowfreq_check");
  const LPBank bank(f.grid());
  const CauchyData low{bank.project(f, -1), bank.project(g, -1), 0.0, m0};
  low.validate();
  const int d = f.grid().dim();
  const double nrm = norm_l1(low.f) + norm_l1(low.g);

  LowFreqResult out;
  for (DecayReport* rep : {&out.phi, &out.dphi}) {
    rep->band = -1;
    rep->mass = m0;
    rep->dim = d;
    rep->t0 = 0.0;
    rep->curve.data_norm = nrm;
  }
  out.phi.inequality_id = out.phi.curve.label = "lowfreq";
  out.dphi.inequality_id = out.dphi.curve.label = "lowfreq_dphi";

  if (nrm >= kDegenerateNorm) {
    const Propagator prop(low);
    for (double t : times) {
      const SupSample s = refined_sups(prop, t);
      out.phi.curve.times.push_back(t);
      out.phi.curve.weighted_sup.push_back(m0 * std::pow(1.0 + t, 0.5 * d) * s.phi);
      out.phi.curve.raw_sup.push_back(s.phi);
      out.dphi.curve.times.push_back(t);
      out.dphi.curve.weighted_sup.push_back(std::pow(1.0 + t, 0.5 * (d - 1)) * s.dphi);
      out.dphi.curve.raw_sup.push_back(s.dphi);
    }
  }
  for (DecayReport* rep : {&out.phi, &out.dphi}) {
    finish_constants(*rep, nrm);
    if (!rep->skipped && positive(rep->curve.raw_sup, times, t_lo, t_hi)) {
      rep->fit = fit_exponent(rep->curve, t_lo, t_hi);
      rep->fitted = true;
    }
  }
  return out;
}

HighFreqResult highfreq_check(const Field& f, const Field& g, double m0, int k,
                              const std::vector<double>& times) {
  if (k < 0) throw ContractError("highfreq_check: band must be >= 0");
  require_times(times, 2.0, "highfreq_check");
  const LPBank bank(f.grid());
  if (k > bank.k_max()) throw ContractError("highfreq_check: band above the grid Nyquist frequency");
  const CauchyData band{bank.project(f, k), bank.project(g, k), 2.0, m0};
  band.validate();
  const int d = f.grid().dim();
  const double nf = norm_l1(band.f);
  const double ng = norm_l1(band.g);
  const double kd = static_cast<double>(k);

  HighFreqResult out;
  for (DecayReport* rep : {&out.phi, &out.dphi}) {
    rep->band = k;
    rep->mass = m0;
    rep->dim = d;
    rep->t0 = 2.0;
  }
  out.phi.inequality_id = out.phi.curve.label = "highfreq";
  out.dphi.inequality_id = out.dphi.curve.label = "wavedecay";
  out.phi.curve.data_norm =
      std::exp2(kd * d / 2.0 + kd) * nf + std::exp2(kd * d / 2.0) * ng;
  out.dphi.curve.data_norm =
      std::exp2(kd * (d - 1) / 2.0 + 2.0 * kd) * nf + std::exp2(kd * (d - 1) / 2.0 + kd) * ng;

  if (nf + ng >= kDegenerateNorm) {
    const Propagator prop(band);
    for (double t : times) {
      const SupSample s = refined_sups(prop, t);
      out.phi.curve.times.push_back(t);
      out.phi.curve.weighted_sup.push_back(m0 * std::pow(t - 2.0, 0.5 * d) * s.phi);
      out.phi.curve.raw_sup.push_back(s.phi);
      out.dphi.curve.times.push_back(t);
      out.dphi.curve.weighted_sup.push_back(std::pow(t - 2.0, 0.5 * (d - 1)) * s.dphi);
      out.dphi.curve.raw_sup.push_back(s.dphi);
    }
  }
  finish_constants(out.phi, nf + ng);
  finish_constants(out.dphi, nf + ng);
  return out;
}

std::vector<DecayReport> interpolation_check(const Field& f, const Field& g, double m0, int k,
                                             const std::vector<double>& exponents,
                                             const std::vector<double>& times) {
  if (k < 0) throw ContractError("interpolation_check: band must be >= 0");
  const int d = f.grid().dim();
  for (double s : exponents) {
    if (!(s >= 0.5 * (d - 1) - 1e-12 && s <= 0.5 * d + 1e-12)) {
      throw ContractError("interpolation_check: s must lie in [(d-1)/2, d/2]");
    }
  }
  require_times(times, 0.0, "interpolation_check");
  const LPBank bank(f.grid());
  if (k > bank.k_max()) throw ContractError("interpolation_check: band above the grid Nyquist frequency");
  const CauchyData band{bank.project(f, k), bank.project(g, k), 0.0, m0};
  band.validate();
  const double nf = norm_l1(band.f);
  const double ng = norm_l1(band.g);
  const double kd = static_cast<double>(k);

  std::vector<double> raw;
  if (nf + ng >= kDegenerateNorm) {
    const Propagator prop(band);
    for (double t : times) raw.push_back(refined_sups(prop, t).phi);
  }

  std::vector<DecayReport> out;
  for (double s : exponents) {
    DecayReport rep;
    rep.inequality_id = "interpolation";
    rep.band = k;
    rep.mass = m0;
    rep.dim = d;
    rep.t0 = 0.0;
    rep.s = s;
    rep.curve.label = "interpolation_s" + std::to_string(s);
    rep.curve.data_norm = std::exp2(kd * s) * (std::exp2(kd) * nf + ng);
    for (std::size_t i = 0; i < raw.size(); ++i) {
      rep.curve.times.push_back(times[i]);
      rep.curve.weighted_sup.push_back(std::pow(times[i], s) * raw[i]);
      rep.curve.raw_sup.push_back(raw[i]);
    }
    finish_constants(rep, nf + ng);
    out.push_back(std::move(rep));
  }
  return out;
}

DecayReport interpolation_check(const Field& f, const Field& g, double m0, int k, double s,
                                const std::vector<double>& times) {
  return interpolation_check(f, g, m0, k, std::vector<double>{s}, times).front();
}

DecayReport wavedecay_implied_check(const Field& f, const Field& g, double m0, int k,
                                    const std::vector<double>& times) {
  if (k < 0) throw ContractError("wavedecay_implied_check: band must be >= 0");
  require_times(times, 0.0, "wavedecay_implied_check");
  const Grid& grid = f.grid();
  const int d = grid.dim();
  const LPBank bank(grid);
  if (k > bank.k_max()) throw ContractError("wavedecay_implied_check: band above the grid Nyquist frequency");
  const SpectralField fk = bank.project(forward_transform(f), k);
  const SpectralField gk = bank.project(forward_transform(g), k);
  const double nf = norm_l1(inverse_transform(fk));
  const double ng = norm_l1(inverse_transform(gk));
  const double kd = static_cast<double>(k);

  DecayReport rep;
  rep.inequality_id = "wavedecay_implied";
  rep.band = k;
  rep.mass = m0;
  rep.dim = d;
  rep.t0 = 0.0;
  rep.s = 0.5 * (d - 1);
  rep.curve.label = "wavedecay_implied";
  rep.curve.data_norm = std::exp2(kd * (d - 1) / 2.0) * (std::exp2(kd) * nf + ng);

  if (nf + ng >= kDegenerateNorm) {
    // d_i Laplacian^-1: symbol i xi_i / (-|xi|^2), zero at xi = 0.
    std::vector<Propagator> props;
    for (int a = 0; a < d; ++a) {
      SpectralField fa = fk;
      SpectralField ga = gk;
      for (std::size_t i = 0; i < grid.size(); ++i) {
        const double r2 = std::pow(grid.frequency_norm(i), 2);
        const double xa = grid.odd_wavenumber(grid.unravel(i)[a]);
        const std::complex<double> m = r2 > 0.0 ? std::complex<double>(0.0, -xa / r2) : 0.0;
        fa[i] *= m;
        ga[i] *= m;
      }
      props.emplace_back(CauchyData{inverse_transform(fa), inverse_transform(ga), 0.0, m0});
    }
    for (double t : times) {
      Field total(grid);
      for (const Propagator& p : props) total += derivative_magnitude(p.evolve(t));
      const std::size_t im = argmax_abs(total.values());
      double best = total[im];
      if (best > 0.0) {
        best = refine_max(grid, grid.position(im), best, [&](const Point& x) {
          double s = 0.0;
          for (const Propagator& p : props) s += gradient_magnitude(p.evaluate_at({t, x}), d);
          return s;
        });
      }
      rep.curve.times.push_back(t);
      rep.curve.weighted_sup.push_back(std::pow(t, 0.5 * (d - 1)) * best);
      rep.curve.raw_sup.push_back(best);
    }
  }
  finish_constants(rep, nf + ng);
  return rep;
}

}  // namespace kgd
