#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kgdisp/grid.hpp"
#include "kgdisp/propagator.hpp"

namespace kgd {

/// Radial bump  amplitude * exp(-2 / (1 - |x - c|^2 / r^2))  supported in B(c, r).
Field bump(const Grid& grid, const Point& center, double radius, double amplitude = 1.0);
/// Exact derivative of the bump along `axis`.
Field bump_derivative(const Grid& grid, const Point& center, double radius, int axis,
                      double amplitude = 1.0);
/// Unit-mass point source: 1/h^d at the origin node, zero elsewhere.
Field point_source(const Grid& grid);

/// Velocity profile accompanying a bump position profile.
enum class VelocityKind { Zero, Bump, BumpDerivative };

std::string to_string(VelocityKind kind);

struct BumpSample {
  Point center{0.0, 0.0, 0.0};
  double radius = 1.0;
  VelocityKind velocity = VelocityKind::Zero;
};

/// Deterministic randomized bump parameters: radii in [min_radius, max_radius],
/// centers uniform in [-max_shift, max_shift]^d, velocity kinds cycling through
/// zero, bump and bump derivative.
std::vector<BumpSample> random_bump_samples(int dim, std::size_t count, std::uint64_t seed,
                                            double min_radius, double max_radius, double max_shift);

CauchyData make_bump_data(const Grid& grid, const BumpSample& sample, double t0, double mass);

/// Default prop-mode data: f = unit-radius bump at the origin, g = its first-axis derivative.
CauchyData canonical_bump_data(const Grid& grid, double mass);

}  // namespace kgd
