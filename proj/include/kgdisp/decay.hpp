#pragma once

#include <string>
#include <vector>

#include "kgdisp/grid.hpp"
#include "kgdisp/littlewood_paley.hpp"
#include "kgdisp/propagator.hpp"

namespace kgd {

/// A sampled decay curve: weighted sup-norm and plain sup-norm per time.
struct DecayCurve {
  std::string label;
  std::vector<double> times;
  std::vector<double> weighted_sup;
  std::vector<double> raw_sup;
  /// Data norms forming the right-hand side of the estimate.
  double data_norm = 0.0;

  /// Throws InvariantError unless times increase strictly and values are finite and >= 0.
  void validate() const;
};

struct FitResult {
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;  // RMS of log-space fit errors
  std::size_t points = 0;
};

/// Least-squares line through (log t, log value) for t in [t_lo, t_hi].
/// Needs at least 5 points and positive values (ContractError otherwise).
FitResult fit_exponent(const std::vector<double>& times, const std::vector<double>& values,
                       double t_lo, double t_hi);
FitResult fit_exponent(const DecayCurve& curve, double t_lo, double t_hi);

struct DecayReport {
  std::string inequality_id;
  int band = -1;
  double mass = 0.0;
  int dim = 1;
  double t0 = 0.0;
  double s = 0.0;  // interpolation exponent, unused otherwise
  bool skipped = false;
  FitResult fit;
  bool fitted = false;
  /// max over times of weighted_sup / (stated data norm combination).
  double empirical_constant = 0.0;
  /// max over times of weighted_sup / (||f||_1 + ||g||_1), no 2^k factors.
  double unnormalized_constant = 0.0;
  DecayCurve curve;
};

/// Sup-norms of phi and |d phi| = sqrt(phi_t^2 + |grad phi|^2) at one time.
/// The grid maximum is refined by direct evaluation at offsets j*h/4,
/// j = -3..3 per axis, around the grid maximizer.
struct SupSample {
  double phi = 0.0;
  double dphi = 0.0;
};
SupSample refined_sups(const Propagator& prop, double t);

/// Pointwise decay of the energy-type weighted norms for compactly supported
/// data at t0 = 2:
///   LHS(t) = m^2 t^d |phi|^2_inf + t^(d-1) |phi_t|^2_inf + t^(d-1) |grad phi|^2_inf
///   RHS    = ||f||^2_{H^(floor(d/2)+2)} + ||g||^2_{H^(floor(d/2)+1)}
/// weighted_sup = sqrt(LHS), data_norm = sqrt(RHS). The fit is of sup|phi| over
/// the window. Data with more than 1e-8 of their L1 mass outside B(0,1) raise
/// ConfigError.
struct Prop2Report {
  DecayReport report;
  FitResult fit_dphi_dt;
  FitResult fit_grad;
};
Prop2Report prop2_decay_check(const CauchyData& data, const std::vector<double>& times, double t_lo,
                              double t_hi);

/// Low-frequency estimate with data placed at t = 0:
///   m0 (1+t)^(d/2) |P_-1 phi| and (1+t)^((d-1)/2) |d P_-1 phi|
/// against ||P_-1 f||_1 + ||P_-1 g||_1. The first report is for phi (fit of
/// sup|P_-1 phi| over the window), the second for the derivative.
struct LowFreqResult {
  DecayReport phi;
  DecayReport dphi;
};
LowFreqResult lowfreq_check(const Field& f, const Field& g, double m0,
                            const std::vector<double>& times, double t_lo, double t_hi);

/// Band-k estimates with data placed at t0 = 2, weights (t-2)^(d/2) and (t-2)^((d-1)/2):
///   phi:   m0 (t-2)^(d/2) |phi_k|     vs 2^(kd/2+k) ||P_k f||_1 + 2^(kd/2) ||P_k g||_1
///   dphi:  (t-2)^((d-1)/2) |d phi_k|  vs 2^(k(d-1)/2+2k) ||P_k f||_1 + 2^(k(d-1)/2+k) ||P_k g||_1
/// Times must exceed 2.
struct HighFreqResult {
  DecayReport phi;   // "highfreq"
  DecayReport dphi;  // "wavedecay"
};
HighFreqResult highfreq_check(const Field& f, const Field& g, double m0, int k,
                              const std::vector<double>& times);

/// Interpolated estimate with data at t = 0:
///   t^s |P_k phi|  vs  2^(ks) (2^k ||P_k f||_1 + ||P_k g||_1),  s in [(d-1)/2, d/2].
DecayReport interpolation_check(const Field& f, const Field& g, double m0, int k, double s,
                                const std::vector<double>& times);
/// One evolution shared by several exponents.
std::vector<DecayReport> interpolation_check(const Field& f, const Field& g, double m0, int k,
                                             const std::vector<double>& exponents,
                                             const std::vector<double>& times);

/// Bound on |P_k phi| implied by the derivative estimate: with
/// f'_i = d_i Laplacian^-1 P_k f (same for g) one has P_k phi = sum_i d_i phi'_i,
/// so |P_k phi| <= sum_i |d phi'_i|. Reports
///   max_t t^((d-1)/2) sup_x sum_i |d phi'_i|  /  2^(k(d-1)/2) (2^k ||P_k f||_1 + ||P_k g||_1)
/// with data at t = 0; comparable to interpolation_check at s = (d-1)/2.
DecayReport wavedecay_implied_check(const Field& f, const Field& g, double m0, int k,
                                    const std::vector<double>& times);

/// Projected data norms below this are treated as vanishing (report skipped).
inline constexpr double kDegenerateNorm = 1e-12;

}  // namespace kgd
