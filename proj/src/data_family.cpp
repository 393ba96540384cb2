#include "kgdisp/data_family.hpp"

#include <cmath>
#include <random>

#include "kgdisp/errors.hpp"

namespace kgd {

namespace {

double scaled_radius_sq(const Grid& grid, const Point& x, const Point& c, double r) {
  double q = 0.0;
  for (int a = 0; a < grid.dim(); ++a) q += (x[a] - c[a]) * (x[a] - c[a]);
  return q / (r * r);
}

}  // namespace

Field bump(const Grid& grid, const Point& center, double radius, double amplitude) {
  if (!(radius > 0.0)) throw ContractError("bump: radius must be positive");
  Field out(grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double q = scaled_radius_sq(grid, grid.position(i), center, radius);
    if (q < 1.0) out[i] = amplitude * std::exp(-2.0 / (1.0 - q));
  }
  return out;
}

Field bump_derivative(const Grid& grid, const Point& center, double radius, int axis,
                      double amplitude) {
  if (!(radius > 0.0)) throw ContractError("bump_derivative: radius must be positive");
  if (axis < 0 || axis >= grid.dim()) throw ContractError("bump_derivative: axis out of range");
  Field out(grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const Point x = grid.position(i);
    const double q = scaled_radius_sq(grid, x, center, radius);
    if (q < 1.0) {
      const double u = 1.0 - q;
      out[i] = amplitude * std::exp(-2.0 / u) * (-4.0 * (x[axis] - center[axis]) / (radius * radius * u * u));
    }
  }
  return out;
}

Field point_source(const Grid& grid) {
  Field out(grid);
  Index origin{0, 0, 0};
  for (int a = 0; a < grid.dim(); ++a) origin[a] = grid.points_per_axis() / 2;
  out[grid.ravel(origin)] = 1.0 / grid.cell_volume();
  return out;
}

std::string to_string(VelocityKind kind) {
  switch (kind) {
    case VelocityKind::Zero: return "zero";
    case VelocityKind::Bump: return "bump";
    case VelocityKind::BumpDerivative: return "bump_derivative";
  }
  return "unknown";
}

std::vector<BumpSample> random_bump_samples(int dim, std::size_t count, std::uint64_t seed,
                                            double min_radius, double max_radius, double max_shift) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> radius(min_radius, max_radius);
  std::uniform_real_distribution<double> shift(-max_shift, max_shift);
  std::vector<BumpSample> out;
  for (std::size_t s = 0; s < count; ++s) {
    BumpSample b;
    for (int a = 0; a < dim; ++a) b.center[a] = shift(rng);
    b.radius = radius(rng);
    b.velocity = static_cast<VelocityKind>(s % 3);
    out.push_back(b);
  }
  return out;
}

CauchyData make_bump_data(const Grid& grid, const BumpSample& sample, double t0, double mass) {
  Field f = bump(grid, sample.center, sample.radius);
  Field g(grid);
  if (sample.velocity == VelocityKind::Bump) g = bump(grid, sample.center, sample.radius);
  if (sample.velocity == VelocityKind::BumpDerivative) {
    g = bump_derivative(grid, sample.center, sample.radius, 0);
  }
  return {std::move(f), std::move(g), t0, mass};
}

CauchyData canonical_bump_data(const Grid& grid, double mass) {
  const Point origin{0.0, 0.0, 0.0};
  return {bump(grid, origin, 1.0), bump_derivative(grid, origin, 1.0, 0), 2.0, mass};
}

}  // namespace kgd
