#include "kgdisp/hyperboloid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "kgdisp/errors.hpp"
#include "kgdisp/spectral.hpp"

namespace kgd {

namespace {

bool is_zero(const CauchyData& data) {
  return norm_linf(data.f) == 0.0 && norm_linf(data.g) == 0.0;
}

}  // namespace

HyperboloidSlice build_slice(double tau, const Grid& grid, double support_radius_at_t0, double t0) {
  if (!(tau > 0.0)) throw ContractError("build_slice: tau must be positive");
  const double rho = support_radius_at_t0;
  const double c = t0 - rho;
  if (!(c > 0.0)) {
    throw ConfigError("build_slice: data support radius must be smaller than t0 for the slice "
                      "to bound the solution support");
  }
  if (tau * tau < t0 * t0 - rho * rho - 1e-12) {
    throw ConfigError("build_slice: tau = " + std::to_string(tau) +
                      " is below sqrt(t0^2 - rho^2); the slice does not cover the support region");
  }
  const double r_support = std::max(0.0, (tau * tau - c * c) / (2.0 * c));
  const double half = 0.5 * grid.box_length();
  if (r_support > half) {
    throw ConfigError("build_slice: solution support on the slice (radius " +
                      std::to_string(r_support) + ") exceeds the half box length " +
                      std::to_string(half));
  }

  HyperboloidSlice s{tau, grid, {}, {}, {}, {}, r_support, std::min(r_support + 1.0, half)};
  const double r2max = s.truncation_radius * s.truncation_radius;
  const double hd = grid.cell_volume();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const Point x = grid.position(i);
    double r2 = 0.0;
    for (int a = 0; a < grid.dim(); ++a) r2 += x[a] * x[a];
    if (r2 > r2max) continue;
    const double t = std::sqrt(tau * tau + r2);
    s.nodes.push_back(i);
    s.x.push_back(x);
    s.t.push_back(t);
    s.weight.push_back(tau / t * hd);
  }
  return s;
}

SliceState sample_on_slice(const Propagator& prop, const HyperboloidSlice& slice) {
  std::vector<SpaceTimePoint> pts(slice.size());
  for (std::size_t j = 0; j < slice.size(); ++j) pts[j] = {slice.t[j], slice.x[j]};
  const auto values = prop.evaluate_at_points(pts);
  SliceState out;
  out.phi.reserve(values.size());
  out.dphi_dt.reserve(values.size());
  out.grad.reserve(values.size());
  for (const auto& v : values) {
    if (!std::isfinite(v.phi) || !std::isfinite(v.dphi_dt)) {
      throw InvariantError("sample_on_slice: non-finite sample");
    }
    out.phi.push_back(v.phi);
    out.dphi_dt.push_back(v.dphi_dt);
    out.grad.push_back(v.grad);
  }
  return out;
}

std::vector<double> boost_field(const HyperboloidSlice& slice, const SliceState& state, int axis) {
  if (axis < 0 || axis >= slice.grid.dim()) throw ContractError("boost_field: axis out of range");
  if (state.phi.size() != slice.size()) throw ContractError("boost_field: state does not match slice");
  std::vector<double> out(slice.size());
  for (std::size_t j = 0; j < slice.size(); ++j) {
    out[j] = slice.x[j][axis] * state.dphi_dt[j] + slice.t[j] * state.grad[j][axis];
  }
  return out;
}

double integrate_on_slice(const HyperboloidSlice& slice, const std::vector<double>& integrand) {
  if (integrand.size() != slice.size()) throw ContractError("integrate_on_slice: size mismatch");
  double s = 0.0;
  for (std::size_t j = 0; j < slice.size(); ++j) s += integrand[j] * slice.weight[j];
  return s;
}

double EnergyReport::relative_error() const {
  if (flat_energy == 0.0) return energy == 0.0 ? 0.0 : INFINITY;
  return std::abs(energy - flat_energy) / flat_energy;
}

double flat_energy(const CauchyData& data) {
  const Grid& g = data.grid();
  const double m2 = data.mass * data.mass;
  double s = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) s += data.g[i] * data.g[i] + m2 * data.f[i] * data.f[i];
  for (int a = 0; a < g.dim(); ++a) {
    const Field df = spatial_derivative(data.f, a);
    for (double v : df.values()) s += v * v;
  }
  return s * g.cell_volume();
}

EnergyReport energy(const Propagator& prop, double tau, double support_radius) {
  const CauchyData& data = prop.data();
  EnergyReport rep;
  rep.tau = tau;
  const HyperboloidSlice slice = build_slice(tau, data.grid(), support_radius, data.t0);
  rep.flat_energy = flat_energy(data);
  if (is_zero(data)) return rep;

  const SliceState st = sample_on_slice(prop, slice);
  const int d = data.grid().dim();
  const double m2 = data.mass * data.mass;
  std::vector<double> boost_sq(slice.size(), 0.0);
  for (int a = 0; a < d; ++a) {
    const auto l = boost_field(slice, st, a);
    for (std::size_t j = 0; j < slice.size(); ++j) boost_sq[j] += l[j] * l[j];
  }
  std::vector<double> i0(slice.size()), i1(slice.size()), i2(slice.size());
  for (std::size_t j = 0; j < slice.size(); ++j) {
    const double t = slice.t[j];
    i0[j] = boost_sq[j] / (t * tau);
    i1[j] = tau / t * st.dphi_dt[j] * st.dphi_dt[j];
    i2[j] = t / tau * m2 * st.phi[j] * st.phi[j];
  }
  rep.components[0] = integrate_on_slice(slice, i0);
  rep.components[1] = integrate_on_slice(slice, i1);
  rep.components[2] = integrate_on_slice(slice, i2);
  rep.energy = rep.components[0] + rep.components[1] + rep.components[2];
  return rep;
}

EnergyReport energy(const CauchyData& data, double tau, double support_radius) {
  return energy(Propagator(data), tau, support_radius);
}

EnergyReport energy(const CauchyData& data, double tau) {
  return energy(data, tau, measured_support_radius(data));
}

std::vector<std::vector<int>> boost_words(int dim, int length) {
  std::vector<std::vector<int>> words{{}};
  for (int l = 0; l < length; ++l) {
    std::vector<std::vector<int>> next;
    for (const auto& w : words) {
      for (int a = 0; a < dim; ++a) {
        auto u = w;
        u.push_back(a);
        next.push_back(std::move(u));
      }
    }
    words = std::move(next);
  }
  return words;
}

SobolevCheck global_sobolev_check(const CauchyData& data, double tau, int ell, int extra_order) {
  if (extra_order < 0) throw ContractError("global_sobolev_check: extra order must be >= 0");
  data.validate();
  SobolevCheck out;
  out.tau = tau;
  out.ell = ell;
  const Grid& g = data.grid();
  const int d = g.dim();
  const double rho = measured_support_radius(data);
  const HyperboloidSlice slice = build_slice(tau, g, rho, data.t0);
  if (is_zero(data)) return out;

  const SliceState st = sample_on_slice(Propagator(data), slice);
  for (std::size_t j = 0; j < slice.size(); ++j) {
    const double t = slice.t[j];
    const double w = std::pow(tau, 1 - ell) * std::pow(t, d + ell - 1);
    out.lhs = std::max(out.lhs, w * st.phi[j] * st.phi[j]);
  }

  const int order = SobolevOrder::for_dimension(d).s_d + extra_order;
  for (int len = 0; len <= order; ++len) {
    for (const auto& word : boost_words(d, len)) {
      const CauchyData wd = len == 0 ? data : boost_commuted_data(data, word);
      const SliceState ws = len == 0 ? st : sample_on_slice(Propagator(wd), slice);
      std::vector<double> integrand(slice.size());
      for (std::size_t j = 0; j < slice.size(); ++j) {
        integrand[j] = std::pow(slice.t[j] / tau, ell) * ws.phi[j] * ws.phi[j];
      }
      out.rhs += integrate_on_slice(slice, integrand);
    }
  }
  if (out.rhs == 0.0) {
    if (out.lhs > 0.0) throw InvariantError("global_sobolev_check: rhs vanished with lhs > 0");
    return out;
  }
  out.ratio = out.lhs / out.rhs;
  return out;
}

EntoinftyCheck entoinfty_check(const CauchyData& data, double tau) {
  data.validate();
  EntoinftyCheck out;
  out.tau = tau;
  const Grid& g = data.grid();
  const int d = g.dim();
  const double rho = measured_support_radius(data);
  const HyperboloidSlice slice = build_slice(tau, g, rho, data.t0);
  if (is_zero(data)) return out;

  const Propagator prop(data);
  const SliceState st = sample_on_slice(prop, slice);
  const double m2 = data.mass * data.mass;
  for (std::size_t j = 0; j < slice.size(); ++j) {
    const double t = slice.t[j];
    out.lhs_terms[0] = std::max(out.lhs_terms[0], m2 * std::pow(t, d) * st.phi[j] * st.phi[j]);
    out.lhs_terms[1] = std::max(out.lhs_terms[1],
                                tau * tau * std::pow(t, d - 2) * st.dphi_dt[j] * st.dphi_dt[j]);
  }
  for (int a = 0; a < d; ++a) {
    const auto l = boost_field(slice, st, a);
    double m = 0.0;
    for (std::size_t j = 0; j < slice.size(); ++j) m = std::max(m, std::pow(slice.t[j], d - 2) * l[j] * l[j]);
    out.lhs_terms[2] += m;
  }

  const int order = SobolevOrder::for_dimension(d).s_d;
  for (int len = 0; len <= order; ++len) {
    for (const auto& word : boost_words(d, len)) {
      if (len == 0) {
        out.rhs_energy_sum += energy(prop, tau, rho).energy;
      } else {
        out.rhs_energy_sum += energy(boost_commuted_data(data, word), tau, rho).energy;
      }
    }
  }
  const double lhs = out.lhs_terms[0] + out.lhs_terms[1] + out.lhs_terms[2];
  if (out.rhs_energy_sum == 0.0) {
    if (lhs > 0.0) throw InvariantError("entoinfty_check: energy sum vanished with lhs > 0");
    return out;
  }
  out.ratio = lhs / out.rhs_energy_sum;
  return out;
}

}  // namespace kgd
