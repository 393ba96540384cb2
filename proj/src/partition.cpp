#include "kgdisp/partition.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "kgdisp/errors.hpp"
#include "kgdisp/spectral.hpp"

namespace kgd {

namespace {

double binomial(int n, int r) {
  double out = 1.0;
  for (int j = 1; j <= r; ++j) out = out * (n - r + j) / j;
  return out;
}

std::size_t patch_points(int dim) {
  switch (dim) {
    case 1: return 512;
    case 2: return 128;
    default: return 32;
  }
}

// Visit every grid index with |x_a - c_a| < radius on each axis.
template <typename Fn>
void for_each_node_in_cube(const Grid& g, const Point& c, double radius, Fn&& fn) {
  const double h = g.spacing();
  const long n = static_cast<long>(g.points_per_axis());
  long lo[kMaxDim] = {0, 0, 0};
  long hi[kMaxDim] = {0, 0, 0};
  for (int a = 0; a < g.dim(); ++a) {
    const double base = static_cast<double>(n / 2);
    lo[a] = std::max(0L, static_cast<long>(std::floor((c[a] - radius) / h + base)));
    hi[a] = std::min(n - 1, static_cast<long>(std::ceil((c[a] + radius) / h + base)));
  }
  Index idx{0, 0, 0};
  std::function<void(int)> rec = [&](int axis) {
    if (axis == g.dim()) {
      fn(g.ravel(idx));
      return;
    }
    for (long j = lo[axis]; j <= hi[axis]; ++j) {
      idx[axis] = static_cast<std::size_t>(j);
      rec(axis + 1);
    }
  };
  rec(0);
}

double squared_distance(const Point& a, const Point& b, int dim) {
  double s = 0.0;
  for (int i = 0; i < dim; ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return s;
}

}  // namespace

SpatialPartition::SpatialPartition(const Grid& grid, double active_half_width)
    : grid_(grid),
      half_width_(active_half_width),
      spacing_(1.0 / std::sqrt(static_cast<double>(grid.dim()))) {
  if (!(active_half_width > 0.0)) {
    throw ContractError("SpatialPartition: active half-width must be positive");
  }
  if (active_half_width + 1.0 > 0.5 * grid.box_length()) {
    throw ConfigError("SpatialPartition: box too small, active region plus unit margin (" +
                      std::to_string(active_half_width + 1.0) + ") exceeds half box length (" +
                      std::to_string(0.5 * grid.box_length()) + ")");
  }
  const int d = grid.dim();
  const long m = static_cast<long>(std::floor((half_width_ + 1.0) / spacing_ + 1e-12));
  long counter[kMaxDim] = {-m, -m, -m};
  for (int a = d; a < kMaxDim; ++a) counter[a] = 0;
  while (true) {
    Point c{0.0, 0.0, 0.0};
    bool origin = true;
    for (int a = 0; a < d; ++a) {
      c[a] = counter[a] * spacing_;
      origin = origin && counter[a] == 0;
    }
    if (origin) origin_index_ = centers_.size();
    centers_.push_back(c);
    int a = d - 1;
    while (a >= 0 && counter[a] == m) {
      counter[a] = -m;
      --a;
    }
    if (a < 0) break;
    ++counter[a];
  }
  derivative_bounds_.assign(static_cast<std::size_t>(d + 3), -1.0);
}

long SpatialPartition::overlap_bound() const {
  const int d = dim();
  return static_cast<long>(std::floor(std::pow(16.0 * d, 0.5 * d) + 1e-9));
}

template <typename Fn>
void SpatialPartition::for_each_nearby_lattice_point(const Point& x, Fn&& fn) const {
  const int d = dim();
  long lo[kMaxDim] = {0, 0, 0};
  long hi[kMaxDim] = {0, 0, 0};
  for (int a = 0; a < d; ++a) {
    lo[a] = static_cast<long>(std::ceil((x[a] - 1.0) / spacing_));
    hi[a] = static_cast<long>(std::floor((x[a] + 1.0) / spacing_));
  }
  long m[kMaxDim] = {0, 0, 0};
  std::function<void(int)> rec = [&](int axis) {
    if (axis == d) {
      Point c{0.0, 0.0, 0.0};
      for (int a = 0; a < d; ++a) c[a] = m[a] * spacing_;
      fn(c);
      return;
    }
    for (long j = lo[axis]; j <= hi[axis]; ++j) {
      m[axis] = j;
      rec(axis + 1);
    }
  };
  rec(0);
}

double SpatialPartition::eta(const Point& y) const {
  double r2 = 0.0;
  for (int a = 0; a < dim(); ++a) r2 += y[a] * y[a];
  return r2 < 1.0 ? std::exp(-1.0 / (1.0 - r2)) : 0.0;
}

double SpatialPartition::normalizer(const Point& x) const {
  double s = 0.0;
  for_each_nearby_lattice_point(x, [&](const Point& c) {
    Point y{0.0, 0.0, 0.0};
    for (int a = 0; a < dim(); ++a) y[a] = x[a] - c[a];
    s += eta(y);
  });
  return s;
}

int SpatialPartition::overlap_count(const Point& x) const {
  int count = 0;
  for_each_nearby_lattice_point(x, [&](const Point& c) {
    if (squared_distance(x, c, dim()) < 1.0) ++count;
  });
  return count;
}

double SpatialPartition::cutoff(std::size_t i, const Point& x) const {
  if (i >= centers_.size()) throw ContractError("SpatialPartition: cutoff index out of range");
  Point y{0.0, 0.0, 0.0};
  for (int a = 0; a < dim(); ++a) y[a] = x[a] - centers_[i][a];
  const double e = eta(y);
  return e > 0.0 ? e / normalizer(x) : 0.0;
}

Field SpatialPartition::cutoff_field(std::size_t i) const {
  if (i >= centers_.size()) throw ContractError("SpatialPartition: cutoff index out of range");
  Field out(grid_);
  for_each_node_in_cube(grid_, centers_[i], 1.0,
                        [&](std::size_t flat) { out[flat] = cutoff(i, grid_.position(flat)); });
  return out;
}

Field SpatialPartition::apply_cutoff(std::size_t i, const Field& f) const {
  if (!(f.grid() == grid_)) throw ContractError("apply_cutoff: grid mismatch");
  Field out(grid_);
  for_each_node_in_cube(grid_, centers_[i], 1.0, [&](std::size_t flat) {
    out[flat] = cutoff(i, grid_.position(flat)) * f[flat];
  });
  return out;
}

bool SpatialPartition::in_active_region(const Point& x) const {
  for (int a = 0; a < dim(); ++a) {
    if (std::abs(x[a]) > half_width_ + 1e-12) return false;
  }
  return true;
}

double SpatialPartition::cutoff_derivative_sup(std::size_t i, int k) const {
  const int d = dim();
  if (k < 0 || k > d + 2) throw ContractError("cutoff_derivative_sup: order must lie in [0, d+2]");
  if (i >= centers_.size()) throw ContractError("SpatialPartition: cutoff index out of range");
  const Grid patch(d, patch_points(d), 4.0);
  Field chi(patch);
  for (std::size_t flat = 0; flat < patch.size(); ++flat) {
    Point x = patch.position(flat);
    for (int a = 0; a < d; ++a) x[a] += centers_[i][a];
    chi[flat] = cutoff(i, x);
  }
  const SpectralField spec = forward_transform(chi);
  double bound = norm_linf(chi);
  for (int order = 1; order <= k; ++order) {
    for (const MultiIndex& alpha : multi_indices(d, order)) {
      bound = std::max(bound, norm_linf(inverse_transform(differentiate_multi(spec, alpha))));
    }
  }
  return bound;
}

double SpatialPartition::derivative_bound(int k) const {
  if (k < 0 || k > dim() + 2) throw ContractError("derivative_bound: order must lie in [0, d+2]");
  double& cached = derivative_bounds_[static_cast<std::size_t>(k)];
  if (cached < 0.0) cached = cutoff_derivative_sup(origin_index_, k);
  return cached;
}

double leibniz_constant(int dim, int k) {
  double worst = 0.0;
  for (int bo = 0; bo <= k; ++bo) {
    for (const MultiIndex& beta : multi_indices(dim, bo)) {
      double s = 0.0;
      for (int ao = bo; ao <= k; ++ao) {
        for (const MultiIndex& alpha : multi_indices(dim, ao)) {
          double term = 1.0;
          for (int a = 0; a < dim && term > 0.0; ++a) {
            term = alpha[a] < beta[a] ? 0.0 : term * binomial(alpha[a], beta[a]);
          }
          s += term;
        }
      }
      worst = std::max(worst, s);
    }
  }
  return worst;
}

ComparabilityResult w_k1_comparability(const SpatialPartition& p, const Field& f, int k) {
  const Grid& g = p.grid();
  const int d = g.dim();
  if (k < 0 || k > d + 2) throw ContractError("w_k1_comparability: order must lie in [0, d+2]");
  if (!(f.grid() == g)) throw ContractError("w_k1_comparability: grid mismatch");

  const double peak = norm_linf(f);
  for (std::size_t flat = 0; flat < f.size(); ++flat) {
    if (std::abs(f[flat]) > 1e-10 * peak && !p.in_active_region(g.position(flat))) {
      throw ConfigError("w_k1_comparability: data not supported in the active region");
    }
  }

  ComparabilityResult out;
  out.k = k;
  out.constant = p.derivative_bound(k) * leibniz_constant(d, k) * static_cast<double>(p.overlap_bound());
  if (peak == 0.0) return out;

  out.lhs = norm_sobolev_w_k1(f, k);

  // All derivatives of f up to order k, reused for every ball.
  const SpectralField spec = forward_transform(f);
  std::vector<Field> derivs;
  for (int order = 0; order <= k; ++order) {
    for (const MultiIndex& alpha : multi_indices(d, order)) {
      derivs.push_back(order == 0 ? f : inverse_transform(differentiate_multi(spec, alpha)));
    }
  }

  const double hd = g.cell_volume();
  for (std::size_t i = 0; i < p.centers().size(); ++i) {
    const Point& c = p.centers()[i];
    double local = 0.0;
    for_each_node_in_cube(g, c, 1.0, [&](std::size_t flat) {
      if (squared_distance(g.position(flat), c, d) >= 1.0) return;
      for (const Field& df : derivs) local += std::abs(df[flat]);
    });
    out.rhs += local * hd;

    const Field piece = p.apply_cutoff(i, f);
    if (norm_linf(piece) > 0.0) out.mid += norm_sobolev_w_k1(piece, k);
  }
  out.mid_ratio = out.mid / out.lhs;
  out.rhs_ratio = out.rhs / out.lhs;
  return out;
}

}  // namespace kgd
