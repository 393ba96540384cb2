#pragma once

#include <vector>

#include "kgdisp/grid.hpp"
#include "kgdisp/propagator.hpp"

namespace kgd {

/// The hyperboloid {t^2 - |x|^2 = tau^2} parametrized by the spatial grid.
///
/// Sample points are the grid nodes with |x| <= truncation_radius; each carries
/// t(x) = sqrt(tau^2 + |x|^2) and the induced volume weight (tau / t(x)) h^d.
struct HyperboloidSlice {
  double tau = 0.0;
  Grid grid;
  std::vector<std::size_t> nodes;
  std::vector<Point> x;
  std::vector<double> t;
  std::vector<double> weight;
  /// Radius on the slice outside which the solution vanishes.
  double support_radius = 0.0;
  double truncation_radius = 0.0;

  std::size_t size() const { return nodes.size(); }
};

/// Builds the slice for data supported in B(0, support_radius_at_t0) at time t0.
///
/// A solution supported in |x| <= rho + (t - t0) meets the slice inside
/// |x| <= R_s = (tau^2 - c^2) / (2c), c = t0 - rho. The truncation radius is
/// min(R_s + 1, L/2). Errors: tau <= 0 (ContractError); t0 <= rho, tau below
/// sqrt(t0^2 - rho^2), or R_s > L/2 (ConfigError).
HyperboloidSlice build_slice(double tau, const Grid& grid, double support_radius_at_t0,
                             double t0 = 2.0);

/// A solution sampled at the slice points.
struct SliceState {
  std::vector<double> phi;
  std::vector<double> dphi_dt;
  std::vector<Point> grad;
};

SliceState sample_on_slice(const Propagator& prop, const HyperboloidSlice& slice);

/// L^i phi = x^i d/dt phi + t d/dx^i phi at every slice point.
std::vector<double> boost_field(const HyperboloidSlice& slice, const SliceState& state, int axis);

/// sum of integrand(j) * weight(j) over slice points.
double integrate_on_slice(const HyperboloidSlice& slice, const std::vector<double>& integrand);

struct EnergyReport {
  double tau = 0.0;
  double energy = 0.0;
  double flat_energy = 0.0;
  /// [boost term, time-derivative term, mass term]
  double components[3] = {0.0, 0.0, 0.0};
  double relative_error() const;
};

/// Flat energy  integral of g^2 + |grad f|^2 + m^2 f^2 dx.
double flat_energy(const CauchyData& data);

/// Hyperboloidal energy
///   E_m = integral over the slice of (1/(t tau)) sum (L^i phi)^2 + (tau/t) phi_t^2 + (t/tau) m^2 phi^2
/// against the slice volume element. The support radius defaults to the
/// measured support of the data.
EnergyReport energy(const CauchyData& data, double tau);
EnergyReport energy(const CauchyData& data, double tau, double support_radius);
EnergyReport energy(const Propagator& prop, double tau, double support_radius);

struct SobolevCheck {
  double tau = 0.0;
  int ell = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
};

/// lhs = max over the slice of tau^(1-ell) t^(d+ell-1) phi^2;
/// rhs = sum over boost words of length <= s_d + extra_order of
///       integral (t/tau)^ell |L^{i_1}...L^{i_k} phi|^2 dvol.
/// Iterated boosts come from evolving commuted data (t0 = 2 only).
SobolevCheck global_sobolev_check(const CauchyData& data, double tau, int ell, int extra_order = 0);

struct EntoinftyCheck {
  double tau = 0.0;
  /// [m^2 sup t^d phi^2, sup tau^2 t^(d-2) phi_t^2, sum_i sup t^(d-2) (L^i phi)^2]
  double lhs_terms[3] = {0.0, 0.0, 0.0};
  double rhs_energy_sum = 0.0;
  double ratio = 0.0;
};

/// Pointwise weighted bounds against the sum of energies of all boost words of
/// length <= s_d.
EntoinftyCheck entoinfty_check(const CauchyData& data, double tau);

/// All boost words (axis sequences) of length exactly `length`.
std::vector<std::vector<int>> boost_words(int dim, int length);

}  // namespace kgd
