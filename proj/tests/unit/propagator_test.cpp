#include "kgdisp/propagator.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "kgdisp/data_family.hpp"
#include "kgdisp/errors.hpp"
#include "kgdisp/hyperboloid.hpp"
#include "kgdisp/littlewood_paley.hpp"
#include "kgdisp/spectral.hpp"

namespace kgd {
namespace {

constexpr Point kOrigin{0.0, 0.0, 0.0};

TEST(SincOmega, SeriesAndDirectBranchesAgree) {
  EXPECT_DOUBLE_EQ(sinc_omega(2.0, 0.0), 2.0);
  EXPECT_NEAR(sinc_omega(1.0, 0.99e-4), std::sin(0.99e-4) / 0.99e-4, 1e-15);
  EXPECT_NEAR(sinc_omega(1.0, 1.01e-4), std::sin(1.01e-4) / 1.01e-4, 1e-15);
  EXPECT_NEAR(sinc_omega(3.0, 2.0), std::sin(6.0) / 2.0, 1e-15);
  EXPECT_NEAR(sinc_omega(-1.5, 0.0), -1.5, 1e-15);
}

TEST(Propagator, SingleModeClosedForm) {
  const double L = 2.0 * std::numbers::pi * 4.0;
  const Grid g(2, 32, L);
  const double m = 0.7, xi0 = 3.0 * 2.0 * std::numbers::pi / L, xi1 = 2.0 * std::numbers::pi / L;
  const double w = std::sqrt(xi0 * xi0 + xi1 * xi1 + m * m);
  Field f(g), v(g);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Point x = g.position(i);
    f[i] = std::cos(xi0 * x[0] + xi1 * x[1]);
    v[i] = std::sin(xi0 * x[0] - xi1 * x[1]);
  }
  const double t0 = 0.5, t = 4.25, dt = t - t0;
  const EvolvedState s = evolve(CauchyData{f, v, t0, m}, t);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Point x = g.position(i);
    const double a = xi0 * x[0] + xi1 * x[1], b = xi0 * x[0] - xi1 * x[1];
    EXPECT_NEAR(s.phi[i], std::cos(w * dt) * std::cos(a) + std::sin(w * dt) / w * std::sin(b), 1e-12);
    EXPECT_NEAR(s.dphi_dt[i], -w * std::sin(w * dt) * std::cos(a) + std::cos(w * dt) * std::sin(b), 1e-12);
    EXPECT_NEAR(s.grad_phi[0][i],
                -xi0 * std::cos(w * dt) * std::sin(a) + xi0 * std::sin(w * dt) / w * std::cos(b), 1e-12);
  }
}

TEST(Propagator, MasslessZeroModeGrowsLinearly) {
  const Grid g(1, 16, 4.0);
  Field f(g), v(g);
  for (std::size_t i = 0; i < 16; ++i) {
    f[i] = 1.0;
    v[i] = 0.5;
  }
  const EvolvedState s = evolve(CauchyData{f, v, 0.0, 0.0}, 3.0);
  for (std::size_t i = 0; i < 16; ++i) {
    EXPECT_NEAR(s.phi[i], 2.5, 1e-14);
    EXPECT_NEAR(s.dphi_dt[i], 0.5, 1e-14);
  }
}

TEST(Propagator, IdentityAtInitialTime) {
  const Grid g(1, 256, 16.0);
  const CauchyData d = canonical_bump_data(g, 1.0);
  const EvolvedState s = evolve(d, d.t0);
  for (std::size_t i = 0; i < g.size(); ++i) {
    EXPECT_NEAR(s.phi[i], d.f[i], 1e-14);
    EXPECT_NEAR(s.dphi_dt[i], d.g[i], 1e-13);
  }
}

TEST(Propagator, GroupPropertyAndTimeReversal) {
  const Grid g(1, 1024, 64.0);
  const CauchyData d = canonical_bump_data(g, 1.0);
  const EvolvedState mid = evolve(d, 5.0);
  const EvolvedState direct = evolve(d, 9.0);
  const EvolvedState two_step = evolve(CauchyData{mid.phi, mid.dphi_dt, 5.0, 1.0}, 9.0);
  const EvolvedState back = evolve(CauchyData{direct.phi, direct.dphi_dt, 9.0, 1.0}, 2.0);
  for (std::size_t i = 0; i < g.size(); ++i) {
    EXPECT_NEAR(two_step.phi[i], direct.phi[i], 1e-12);
    EXPECT_NEAR(back.phi[i], d.f[i], 1e-12);
  }
}

TEST(Propagator, Linearity) {
  const Grid g(2, 64, 16.0);
  const CauchyData a{bump(g, {1, 0, 0}, 1.0), bump(g, {0, 1, 0}, 2.0), 2.0, 1.0};
  const CauchyData b{bump(g, {-2, 1, 0}, 1.5), Field(g), 2.0, 1.0};
  const EvolvedState sa = evolve(a, 4.0), sb = evolve(b, 4.0);
  const EvolvedState sc = evolve(linear_combination(2.0, a, -3.0, b), 4.0);
  for (std::size_t i = 0; i < g.size(); ++i) {
    EXPECT_NEAR(sc.phi[i], 2.0 * sa.phi[i] - 3.0 * sb.phi[i], 1e-12);
  }
}

TEST(Propagator, FlatEnergyIsConserved) {
  // Resolved data: the Nyquist mode, whose odd derivative is zeroed, carries no energy.
  const Grid g(2, 512, 16.0);
  const CauchyData d{bump(g, kOrigin, 1.0), bump_derivative(g, kOrigin, 1.0, 1), 2.0, 0.8};
  const double e0 = flat_energy(d);
  for (double t : {3.0, 6.0, 10.0}) {
    const EvolvedState s = evolve(d, t);
    EXPECT_NEAR(flat_energy(CauchyData{s.phi, s.dphi_dt, t, 0.8}), e0, 1e-10 * e0);
  }
}

TEST(Propagator, FiniteSpeedOfPropagation) {
  const Grid g(1, 4096, 64.0);
  const CauchyData d = canonical_bump_data(g, 1.0);
  const EvolvedState s = evolve(d, 5.0);
  const double peak = norm_linf(s.phi);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (std::abs(g.coordinate(i)) > 4.5) EXPECT_LT(std::abs(s.phi[i]), 1e-6 * peak);
  }
}

TEST(Propagator, PointEvaluationMatchesGridAndInterpolates) {
  const Grid g(1, 512, 32.0);
  const CauchyData d = canonical_bump_data(g, 1.0);
  const Propagator p(d);
  const EvolvedState s = p.evolve(6.0);
  for (std::size_t j = 100; j < 400; j += 37) {
    const PointValue v = p.evaluate_at({6.0, g.position(j)});
    EXPECT_NEAR(v.phi, s.phi[j], 1e-12);
    EXPECT_NEAR(v.dphi_dt, s.dphi_dt[j], 1e-12);
    EXPECT_NEAR(v.grad[0], s.grad_phi[0][j], 1e-11);
  }
  // Off-grid values of a single mode are exact.
  const double xi = 2.0 * std::numbers::pi * 5.0 / 32.0;
  Field f(g);
  for (std::size_t j = 0; j < g.size(); ++j) f[j] = std::cos(xi * g.coordinate(j));
  const Propagator q(CauchyData{f, Field(g), 0.0, 1.0});
  const double w = std::sqrt(xi * xi + 1.0);
  const PointValue v = q.evaluate_at({2.0, {0.123, 0, 0}});
  EXPECT_NEAR(v.phi, std::cos(2.0 * w) * std::cos(xi * 0.123), 1e-13);
  EXPECT_TRUE(evaluate_at_points(d, {}).empty());
}

TEST(Propagator, ValidatesData) {
  const Grid a(1, 16, 1.0), b(1, 32, 1.0);
  EXPECT_THROW(Propagator(CauchyData{Field(a), Field(b), 2.0, 1.0}), ContractError);
  EXPECT_THROW(Propagator(CauchyData{Field(a), Field(a), 2.0, -1.0}), ContractError);
}

TEST(BoostCommutedData, RequiresT0TwoAndRoom) {
  const Grid g(1, 256, 16.0);
  CauchyData d = canonical_bump_data(g, 1.0);
  d.t0 = 1.0;
  EXPECT_THROW(boost_commuted_data(d, 0), ConfigError);
  const CauchyData edge{bump(g, {7.5, 0, 0}, 0.4), Field(g), 2.0, 1.0};
  EXPECT_THROW(boost_commuted_data(edge, 0), ConfigError);
  EXPECT_THROW(boost_commuted_data(canonical_bump_data(g, 1.0), 1), ContractError);
}

// L phi = x phi_t + t phi_x computed from the original solution.
TEST(BoostCommutedData, CommutesWithEvolutionInTwoDimensions) {
  const Grid g(2, 1024, 12.0);
  const CauchyData d{bump(g, kOrigin, 1.0), bump_derivative(g, kOrigin, 1.0, 0), 2.0, 1.0};
  for (int axis : {0, 1}) {
    const CauchyData c = boost_commuted_data(d, axis);
    for (double t : {3.0, 5.0}) {
      const EvolvedState s = evolve(d, t);
      const Field direct = multiply_by_coordinate(s.dphi_dt, axis) + t * s.grad_phi[axis];
      const Field via = evolve(c, t).phi;
      double err = 0.0;
      for (std::size_t i = 0; i < g.size(); ++i) err = std::max(err, std::abs(via[i] - direct[i]));
      EXPECT_LT(err, 1e-8 * norm_linf(direct)) << "axis " << axis << " t " << t;
    }
  }
}

// A wave packet at |xi| = 2^k lands at |xi| = 1 after rescaling.
TEST(RescaleHighFrequency, PacketFrequencyMapsToUnitScale) {
  const double L = 2.0 * std::numbers::pi * 16.0;
  const Grid g(1, 2048, L);
  const LPBank bank(g);
  const int k = 2;
  Field carrier(g);
  for (std::size_t j = 0; j < g.size(); ++j) carrier[j] = std::cos(4.0 * g.coordinate(j));
  const Field f = bank.project(multiply(carrier, bump(g, kOrigin, 12.0)), k);
  const CauchyData r = rescale_high_frequency(CauchyData{f, Field(g), 2.0, 1.0}, k);
  const SpectralField spec = forward_transform(r.f);
  std::size_t best = 0;
  for (std::size_t i = 0; i < spec.size(); ++i) {
    if (std::abs(spec[i]) > std::abs(spec[best])) best = i;
  }
  EXPECT_NEAR(r.f.grid().frequency_norm(best), 1.0, 1e-12);
}

TEST(RescaleHighFrequency, RejectsDataAtTheBoxEdge) {
  const Grid g(1, 1024, 64.0);
  const LPBank bank(g);
  const Field f = bank.project(bump(g, kOrigin, 1.0), 0);
  EXPECT_THROW(rescale_high_frequency(CauchyData{f, Field(g), 2.0, 1.0}, 0), ConfigError);
}

TEST(RescaleHighFrequency, IdentityForBandZeroAndRejectsBroadbandData) {
  const Grid g(1, 2048, 128.0);
  const LPBank bank(g);
  const Field f0 = bank.project(bump(g, kOrigin, 1.0), 0);
  const CauchyData d{f0, Field(g), 2.0, 1.0};
  const CauchyData same = rescale_high_frequency(d, 0);
  EXPECT_EQ(same.f.grid(), g);
  EXPECT_THROW(rescale_high_frequency(canonical_bump_data(g, 1.0), 1), ContractError);
  EXPECT_THROW(rescale_high_frequency(d, -1), ContractError);
}

// phi~(t, x) = phi(t0 + (t - t0)/2^k, x/2^k), checked against direct evaluation.
TEST(RescaleHighFrequency, MatchesDilatedSolution) {
  const Grid g(1, 2048, 128.0);
  const LPBank bank(g);
  const int k = 2;
  const CauchyData d{bank.project(bump(g, kOrigin, 1.0), k), bank.project(bump(g, {0.5, 0, 0}, 0.5), k),
                     2.0, 1.0};
  const CauchyData r = rescale_high_frequency(d, k);
  EXPECT_DOUBLE_EQ(r.mass, 0.25);
  EXPECT_DOUBLE_EQ(r.f.grid().box_length(), 512.0);
  EXPECT_DOUBLE_EQ(r.f.grid().spacing(), g.spacing());
  const Propagator orig(d);
  const EvolvedState s = evolve(r, 10.0);
  const double scale = norm_linf(s.phi);
  for (std::size_t j = 0; j < r.f.grid().size(); j += 97) {
    const double x = r.f.grid().coordinate(j);
    const PointValue v = orig.evaluate_at({2.0 + 8.0 / 4.0, {x / 4.0, 0, 0}});
    EXPECT_NEAR(s.phi[j], v.phi, 1e-8 * scale) << "x = " << x;
  }
}

TEST(MeasuredSupport, BumpRadius) {
  const Grid g(1, 2048, 32.0);
  const CauchyData d{bump(g, kOrigin, 1.5), Field(g), 2.0, 1.0};
  const double r = measured_support_radius(d);
  EXPECT_LE(r, 1.5);
  EXPECT_GT(r, 1.2);
  EXPECT_EQ(measured_support_radius(CauchyData{Field(g), Field(g), 2.0, 1.0}), 0.0);
}

}  // namespace
}  // namespace kgd
