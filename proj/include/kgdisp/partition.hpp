#pragma once

#include <vector>

#include "kgdisp/grid.hpp"

namespace kgd {

/// Smooth partition of unity subordinate to unit balls centered on the
/// lattice (1/sqrt(d)) Z^d.
///
/// chi_i(x) = eta(x - c_i) / sum_j eta(x - c_j), where eta(y) = exp(-1/(1-|y|^2))
/// on the open unit ball and the denominator runs over the full lattice. The
/// active region is the cube [-A, A]^d; only centers within one unit of it are
/// stored, which is exactly the set of cutoffs that can be nonzero there.
class SpatialPartition {
 public:
  /// Throws ConfigError when the active cube plus a unit margin does not fit
  /// in the grid box.
  SpatialPartition(const Grid& grid, double active_half_width);

  const Grid& grid() const { return grid_; }
  int dim() const { return grid_.dim(); }
  double active_half_width() const { return half_width_; }
  double lattice_spacing() const { return spacing_; }
  const std::vector<Point>& centers() const { return centers_; }

  /// floor((16 d)^(d/2)).
  long overlap_bound() const;
  /// Number of centers whose open unit ball contains x.
  int overlap_count(const Point& x) const;

  double eta(const Point& y) const;
  /// sum over the full lattice of eta(x - c).
  double normalizer(const Point& x) const;
  double cutoff(std::size_t i, const Point& x) const;
  Field cutoff_field(std::size_t i) const;
  Field apply_cutoff(std::size_t i, const Field& f) const;
  bool in_active_region(const Point& x) const;

  /// max over |alpha| <= k of sup |partial^alpha chi_i|, measured spectrally on a
  /// fine periodic patch around center i.
  double cutoff_derivative_sup(std::size_t i, int k) const;
  /// The same bound for the cutoff centered at the origin; by translation
  /// invariance of the lattice it bounds every chi_i.
  double derivative_bound(int k) const;
  std::size_t origin_index() const { return origin_index_; }

 private:
  template <typename Fn>
  void for_each_nearby_lattice_point(const Point& x, Fn&& fn) const;

  Grid grid_;
  double half_width_;
  double spacing_;
  std::vector<Point> centers_;
  std::size_t origin_index_ = 0;
  mutable std::vector<double> derivative_bounds_;
};

/// Leibniz constant: max over beta of sum_{alpha >= beta, |alpha| <= k} binom(alpha, beta).
double leibniz_constant(int dim, int k);

struct ComparabilityResult {
  int k = 0;
  double lhs = 0.0;   // ||f||_{W^{k,1}}
  double mid = 0.0;   // sum_i ||chi_i f||_{W^{k,1}}
  double rhs = 0.0;   // sum_i ||f||_{W^{k,1}(B_i)}
  double mid_ratio = 0.0;  // mid / lhs
  double rhs_ratio = 0.0;  // rhs / lhs
  /// Upper bound for both ratios: derivative_bound(k) * leibniz_constant * overlap_bound.
  double constant = 0.0;
};

/// Both comparisons of the localized W^{k,1} norms. Requires 0 <= k <= d+2 and
/// f supported in the active region.
ComparabilityResult w_k1_comparability(const SpatialPartition& p, const Field& f, int k);

}  // namespace kgd
