#pragma once

#include <vector>

#include "kgdisp/grid.hpp"

namespace kgd {

/// Initial data phi(t0) = f, d/dt phi(t0) = g for the Klein-Gordon equation
/// phi_tt - Laplacian phi + m^2 phi = 0.
struct CauchyData {
  Field f;
  Field g;
  double t0 = 2.0;
  double mass = 1.0;

  const Grid& grid() const { return f.grid(); }
  /// Throws ContractError unless f and g share a grid and mass >= 0.
  void validate() const;
};

CauchyData scaled(const CauchyData& data, double c);
/// a * x + b * y; both must share grid, t0 and mass.
CauchyData linear_combination(double a, const CauchyData& x, double b, const CauchyData& y);

struct EvolvedState {
  double t0 = 0.0;
  double mass = 0.0;
  double t = 0.0;
  Field phi;
  Field dphi_dt;
  std::vector<Field> grad_phi;
};

/// phi, d/dt phi and the spatial gradient at one space-time point.
struct PointValue {
  double phi = 0.0;
  double dphi_dt = 0.0;
  Point grad{0.0, 0.0, 0.0};
};

struct SpaceTimePoint {
  double t = 0.0;
  Point x{0.0, 0.0, 0.0};
};

/// sin(dt*omega)/omega, switching to the series dt(1 - (dt omega)^2/6) when
/// |dt omega| < 1e-4 so that omega = 0 is handled.
double sinc_omega(double dt, double omega);

/// Exact evolution through the Fourier multipliers
///   phi^ = cos(dt w) f^ + sin(dt w)/w g^,  (d/dt phi)^ = -w sin(dt w) f^ + cos(dt w) g^,
/// with w = sqrt(|xi|^2 + m^2) and dt = t - t0. The data spectra are computed
/// once and reused for every time and point.
class Propagator {
 public:
  explicit Propagator(CauchyData data);

  const CauchyData& data() const { return data_; }
  const Grid& grid() const { return data_.grid(); }

  EvolvedState evolve(double t) const;
  /// phi only, skipping the time derivative and gradient.
  Field evolve_phi(double t) const;
  /// Direct trigonometric summation at arbitrary points, using the same
  /// multipliers as evolve. Modes below 1e-17 of the largest data
  /// coefficient are dropped.
  std::vector<PointValue> evaluate_at_points(const std::vector<SpaceTimePoint>& points) const;
  PointValue evaluate_at(const SpaceTimePoint& p) const;

 private:
  struct Mode {
    Point xi;       // full wavenumber
    Point odd_xi;   // wavenumber with the Nyquist entry zeroed
    double omega;
    std::complex<double> f_hat;
    std::complex<double> g_hat;
    double weight;  // 1 for self-conjugate modes, 2 for one representative of a pair
  };

  CauchyData data_;
  SpectralField f_hat_;
  SpectralField g_hat_;
  std::vector<double> omega_;
  std::vector<Mode> modes_;
};

EvolvedState evolve(const CauchyData& data, double t);
std::vector<PointValue> evaluate_at_points(const CauchyData& data,
                                           const std::vector<SpaceTimePoint>& points);

/// Cauchy data at t0 = 2 for L^axis phi, L^i = x^i d/dt + t d/dx^i:
///   f' = 2 d_i f + x^i g,
///   g' = d_i f + 2 d_i g + x^i Laplacian f - x^i m^2 f.
/// Throws ConfigError for t0 != 2 or when the result reaches within one unit
/// of the box edge.
CauchyData boost_commuted_data(const CauchyData& data, int axis);
/// Applies boost_commuted_data along the axes in order (first entry first).
CauchyData boost_commuted_data(const CauchyData& data, const std::vector<int>& axes);

/// Dilation of band-k data to unit frequency scale:
///   f~(x) = f(x / 2^k),  g~(x) = 2^-k g(x / 2^k),  mass -> 2^-k mass,
/// returned on a grid with the same spacing and box length 2^k L. The
/// solutions are related by phi~(t, x) = phi(t0 + (t - t0) / 2^k, x / 2^k).
/// Throws ContractError if the data are not band-limited to band k, and
/// ConfigError if the rescaled data reach the edge of the target box.
CauchyData rescale_high_frequency(const CauchyData& data, int k);

/// Smallest radius R with |f|, |g| <= rel_tol * peak outside the ball B(0, R).
double measured_support_radius(const CauchyData& data, double rel_tol = 1e-14);

}  // namespace kgd
