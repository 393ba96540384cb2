#include "kgdisp/spectral.hpp"

#include <gtest/gtest.h>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <numbers>
#include <random>

#include "kgdisp/data_family.hpp"
#include "kgdisp/errors.hpp"

namespace kgd {
namespace {

Field random_field(const Grid& g, std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  Field f(g);
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = nd(rng);
  return f;
}

TEST(Spectral, RoundTripIsIdentity) {
  std::mt19937_64 rng(3);
  for (int d = 1; d <= 3; ++d) {
    const Grid g(d, d == 1 ? 64 : 16, 5.0);
    const Field f = random_field(g, rng);
    const Field back = inverse_transform(forward_transform(f));
    for (std::size_t i = 0; i < f.size(); ++i) EXPECT_NEAR(back[i], f[i], 1e-12);
  }
}

// Parseval for the unnormalized transform: sum |c|^2 = N^d sum |f|^2.
TEST(Spectral, ParsevalOnRandomFields) {
  std::mt19937_64 rng(100);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = 1 + trial % 3;
    const Grid g(d, d == 1 ? 128 : (d == 2 ? 32 : 8), 1.0 + 0.1 * trial);
    const Field f = random_field(g, rng);
    const double spatial = norm_l2(f);
    EXPECT_NEAR(norm_l2_spectral(forward_transform(f)), spatial, 1e-12 * spatial);
  }
}

TEST(Spectral, RealFieldsHaveHermitianSpectra) {
  std::mt19937_64 rng(5);
  const Grid g(2, 16, 2.0);
  EXPECT_LT(forward_transform(random_field(g, rng)).hermitian_defect(), 1e-14);
}

TEST(Spectral, DerivativeOfSingleModeIsExact) {
  const double L = 10.0;
  const Grid g(2, 32, L);
  const double k0 = 2.0 * std::numbers::pi * 3.0 / L;
  const double k1 = 2.0 * std::numbers::pi * 2.0 / L;
  Field f(g), dx(g), dy(g), lap(g);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Point x = g.position(i);
    f[i] = std::sin(k0 * x[0]) * std::cos(k1 * x[1]);
    dx[i] = k0 * std::cos(k0 * x[0]) * std::cos(k1 * x[1]);
    dy[i] = -k1 * std::sin(k0 * x[0]) * std::sin(k1 * x[1]);
    lap[i] = -(k0 * k0 + k1 * k1) * f[i];
  }
  const Field gx = spatial_derivative(f, 0), gy = spatial_derivative(f, 1), gl = laplacian(f);
  for (std::size_t i = 0; i < g.size(); ++i) {
    EXPECT_NEAR(gx[i], dx[i], 1e-12);
    EXPECT_NEAR(gy[i], dy[i], 1e-12);
    EXPECT_NEAR(gl[i], lap[i], 1e-11);
  }
}

TEST(Spectral, NyquistModeHasZeroOddDerivative) {
  const Grid g(1, 16, 1.0);
  Field f(g);
  for (std::size_t j = 0; j < 16; ++j) f[j] = (j % 2 == 0) ? 1.0 : -1.0;
  EXPECT_LT(norm_linf(spatial_derivative(f, 0)), 1e-12);
  const Field second = derivative_multi(f, MultiIndex{2, 0, 0});
  EXPECT_NEAR(second[0], -std::pow(g.nyquist(), 2), 1e-9);
}

// Independent check: centered finite differences of the bump converge to the
// spectral derivative at second order.
TEST(Spectral, FiniteDifferencesConvergeToSpectralDerivative) {
  const Grid g(1, 2048, 8.0);
  const Field f = bump(g, {0.0, 0.0, 0.0}, 1.5);
  const Field spec = spatial_derivative(f, 0);
  std::vector<double> errs;
  for (double eps : {0.02, 0.01}) {
    double err = 0.0;
    for (std::size_t j = 0; j < g.size(); j += 16) {
      const double x = g.coordinate(j);
      auto b = [](double y) {
        const double q = y * y / 2.25;
        return q < 1.0 ? std::exp(-2.0 / (1.0 - q)) : 0.0;
      };
      err = std::max(err, std::abs((b(x + eps) - b(x - eps)) / (2 * eps) - spec[j]));
    }
    errs.push_back(err);
  }
  EXPECT_GE(std::log2(errs[0] / errs[1]), 1.9);
}

TEST(Spectral, BumpL1MatchesQuadrature) {
  boost::math::quadrature::tanh_sinh<double> ts;
  const double exact = ts.integrate([](double x) { return std::exp(-2.0 / (1.0 - x * x)); }, -1.0, 1.0);
  const Grid g(1, 4096, 16.0);
  EXPECT_NEAR(norm_l1(bump(g, {0.0, 0.0, 0.0}, 1.0)), exact, 1e-10);
}

TEST(Spectral, SobolevNormOfSingleMode) {
  const double L = 2.0 * std::numbers::pi;
  const Grid g(1, 64, L);
  Field f(g);
  for (std::size_t j = 0; j < 64; ++j) f[j] = std::cos(5.0 * g.coordinate(j));
  const double l2 = std::sqrt(L / 2.0);
  EXPECT_NEAR(norm_l2(f), l2, 1e-12);
  // ||f||_{H^s}^2 = integral (1 + |xi|^2)^s |f^|^2, here s = 2 and |xi| = 5.
  EXPECT_NEAR(norm_sobolev_h(f, 2.0), 26.0 * l2, 1e-9);
  EXPECT_NEAR(norm_sobolev_h(f, 0.0), l2, 1e-12);
}

TEST(Spectral, WK1NormContract) {
  const Grid g(1, 64, 4.0);
  const Field f = bump(g, {0.0, 0.0, 0.0}, 1.0);
  EXPECT_THROW(norm_sobolev_w_k1(f, -1), ContractError);
  EXPECT_THROW(norm_sobolev_w_k1(f, 4), ContractError);
  EXPECT_DOUBLE_EQ(norm_sobolev_w_k1(f, 0), norm_l1(f));
  EXPECT_NEAR(norm_sobolev_w_k1(f, 1), norm_l1(f) + norm_l1(spatial_derivative(f, 0)), 1e-14);
}

TEST(Spectral, MultiIndicesCount) {
  EXPECT_EQ(multi_indices(1, 3).size(), 1u);
  EXPECT_EQ(multi_indices(2, 2).size(), 3u);
  EXPECT_EQ(multi_indices(3, 2).size(), 6u);
  for (const MultiIndex& a : multi_indices(3, 3)) EXPECT_EQ(a[0] + a[1] + a[2], 3);
}

TEST(Spectral, UnitMultiplierIsIdentity) {
  const Grid g(1, 32, 4.0);
  Field f(g);
  f[3] = 1.0;
  const Field same = apply_multiplier(f, [](const Point&) { return 1.0; });
  for (std::size_t j = 0; j < 32; ++j) EXPECT_NEAR(same[j], f[j], 1e-15);
}

}  // namespace
}  // namespace kgd
