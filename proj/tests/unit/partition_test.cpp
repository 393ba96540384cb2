#include "kgdisp/partition.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "kgdisp/data_family.hpp"
#include "kgdisp/errors.hpp"

namespace kgd {
namespace {

TEST(Partition, OverlapBoundFormula) {
  EXPECT_EQ(SpatialPartition(Grid(1, 512, 32.0), 4.0).overlap_bound(), 4);
  EXPECT_EQ(SpatialPartition(Grid(2, 128, 16.0), 2.0).overlap_bound(), 32);
  EXPECT_EQ(SpatialPartition(Grid(3, 32, 8.0), 1.0).overlap_bound(), 332);
}

TEST(Partition, RejectsActiveRegionLargerThanBox) {
  EXPECT_THROW(SpatialPartition(Grid(1, 256, 16.0), 7.5), ConfigError);
  EXPECT_NO_THROW(SpatialPartition(Grid(1, 256, 16.0), 7.0));
}

TEST(Partition, SumsToOneInActiveRegion) {
  for (int d = 1; d <= 3; ++d) {
    const Grid g(d, d == 1 ? 512 : 32, 16.0);
    const SpatialPartition p(g, d == 1 ? 6.0 : 2.0);
    std::mt19937_64 rng(d);
    std::uniform_real_distribution<double> u(-p.active_half_width(), p.active_half_width());
    for (int s = 0; s < 300; ++s) {
      Point x{0, 0, 0};
      for (int a = 0; a < d; ++a) x[a] = u(rng);
      double total = 0.0;
      for (std::size_t i = 0; i < p.centers().size(); ++i) {
        const double c = p.cutoff(i, x);
        ASSERT_GE(c, 0.0);
        total += c;
      }
      EXPECT_NEAR(total, 1.0, 1e-12);
      EXPECT_LE(p.overlap_count(x), p.overlap_bound());
    }
  }
}

TEST(Partition, CutoffsVanishOutsideUnitBall) {
  const SpatialPartition p(Grid(2, 64, 16.0), 2.0);
  for (std::size_t i = 0; i < p.centers().size(); i += 5) {
    const Point c = p.centers()[i];
    EXPECT_EQ(p.cutoff(i, {c[0] + 1.0, c[1], 0.0}), 0.0);
    EXPECT_EQ(p.cutoff(i, {c[0] + 0.8, c[1] + 0.8, 0.0}), 0.0);
  }
}

TEST(Partition, FieldCutoffsSumToOneOnActiveNodes) {
  const Grid g(1, 256, 16.0);
  const SpatialPartition p(g, 4.0);
  Field total(g);
  for (std::size_t i = 0; i < p.centers().size(); ++i) total += p.cutoff_field(i);
  for (std::size_t j = 0; j < g.size(); ++j) {
    if (p.in_active_region(g.position(j))) EXPECT_NEAR(total[j], 1.0, 1e-12);
  }
}

TEST(Partition, LeibnizConstant) {
  EXPECT_EQ(leibniz_constant(1, 0), 1.0);
  // d = 1, k = 2: beta = 0 gives binom(0,0)+binom(1,0)+binom(2,0) = 3.
  EXPECT_EQ(leibniz_constant(1, 2), 3.0);
  // d = 2, k = 1: beta = 0 gives 1 + 1 + 1.
  EXPECT_EQ(leibniz_constant(2, 1), 3.0);
}

TEST(Partition, DerivativeBoundsGrowWithOrderAndAreTranslationInvariant) {
  const SpatialPartition p(Grid(1, 512, 32.0), 8.0);
  const double b0 = p.derivative_bound(0), b1 = p.derivative_bound(1), b2 = p.derivative_bound(2);
  EXPECT_NEAR(b0, 1.0, 1e-9);
  EXPECT_GT(b1, b0);
  EXPECT_GE(b2, b1);
  EXPECT_NEAR(p.cutoff_derivative_sup(p.origin_index() + 3, 1), b1, 1e-9 * b1);
}

TEST(Partition, ComparabilityRatiosBoundedByConstant) {
  const Grid g(1, 2048, 64.0);
  const SpatialPartition p(g, 16.0);
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> shift(-3.0, 3.0);
  for (int s = 0; s < 5; ++s) {
    const Field f = bump(g, {shift(rng), 0, 0}, 10.0);
    for (int k : {0, 1}) {
      const ComparabilityResult r = w_k1_comparability(p, f, k);
      EXPECT_GE(r.mid_ratio, 1.0 - 1e-9);
      EXPECT_GE(r.rhs_ratio, 1.0 - 1e-9);
      EXPECT_LE(r.mid_ratio, r.constant);
      EXPECT_LE(r.rhs_ratio, r.constant);
    }
  }
}

TEST(Partition, ComparabilityEdgeCases) {
  const Grid g(1, 512, 32.0);
  const SpatialPartition p(g, 4.0);
  const ComparabilityResult zero = w_k1_comparability(p, Field(g), 1);
  EXPECT_EQ(zero.lhs, 0.0);
  EXPECT_EQ(zero.mid, 0.0);
  EXPECT_THROW(w_k1_comparability(p, bump(g, {10.0, 0, 0}, 1.0), 1), ConfigError);
  EXPECT_THROW(w_k1_comparability(p, bump(g, {0, 0, 0}, 1.0), 4), ContractError);
}

}  // namespace
}  // namespace kgd
