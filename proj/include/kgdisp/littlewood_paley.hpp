#pragma once

#include <vector>

#include "kgdisp/grid.hpp"

namespace kgd {

/// Smooth monotone step: 1 for u <= 0, 0 for u >= 1, C-infinity in between.
///
/// Built as one minus the normalized cumulative integral of the mollifier
/// exp(-1/(1-s^2)) over s in [-1, 2u-1]. The integral is tabulated once with
/// Gauss-Legendre quadrature and evaluated by cubic Hermite interpolation
/// using the exact mollifier as derivative.
double smooth_step(double u);

/// Radial low-pass profile: 1 for r <= 1/2, 0 for r >= 1.
double low_pass_profile(double r);

/// Dyadic Littlewood-Paley projectors on a grid.
///
/// Band -1 is the low-pass profile. Band k >= 0 has the telescoping symbol
/// low_pass(|xi|/2^(k+1)) - low_pass(|xi|/2^k), supported in
/// 2^(k-1) <= |xi| <= 2^(k+1). The bank stops at the first band whose lower
/// edge exceeds the largest lattice frequency, so the symbols sum to exactly
/// one on the whole dual lattice.
class LPBank {
 public:
  explicit LPBank(const Grid& grid);

  const Grid& grid() const { return grid_; }
  int k_max() const { return k_max_; }

  /// Symbol of band k at radial frequency r.
  double symbol(int k, double r) const;
  Field project(const Field& f, int k) const;
  SpectralField project(const SpectralField& spectrum, int k) const;
  /// max over the dual lattice of |sum_k symbol(k, |xi|) - 1|.
  double completeness_residual() const;

  static int k_max_for(const Grid& grid);

 private:
  void require_band(int k) const;

  Grid grid_;
  int k_max_;
};

}  // namespace kgd
