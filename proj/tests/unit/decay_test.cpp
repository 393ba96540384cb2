#include "kgdisp/decay.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "kgdisp/data_family.hpp"
#include "kgdisp/errors.hpp"
#include "kgdisp/run_config.hpp"
#include "kgdisp/spectral.hpp"

namespace kgd {
namespace {

constexpr Point kOrigin{0.0, 0.0, 0.0};

TEST(FitExponent, RecoversPowerLaw) {
  std::vector<double> t, v;
  for (double s = 8.0; s <= 64.0; s += 0.5) {
    t.push_back(s);
    v.push_back(3.0 * std::pow(s, -0.5));
  }
  const FitResult r = fit_exponent(t, v, 8.0, 64.0);
  EXPECT_NEAR(r.slope, -0.5, 1e-12);
  EXPECT_NEAR(std::exp(r.intercept), 3.0, 1e-10);
  EXPECT_LT(r.residual, 1e-12);
  EXPECT_EQ(r.points, t.size());
}

TEST(FitExponent, WindowAndOscillation) {
  std::vector<double> t, v;
  for (double s = 1.0; s <= 100.0; s += 1.0) {
    t.push_back(s);
    v.push_back(std::pow(s, -1.5) * (1.0 + 0.1 * std::cos(s)));
  }
  const FitResult r = fit_exponent(t, v, 10.0, 90.0);
  EXPECT_NEAR(r.slope, -1.5, 0.02);
  EXPECT_EQ(r.points, 81u);
  EXPECT_GT(r.residual, 0.0);
}

TEST(FitExponent, Contract) {
  const std::vector<double> t{1, 2, 3, 4, 5, 6};
  EXPECT_THROW(fit_exponent(t, {1, 1, 1, 1}, 0, 10), ContractError);
  EXPECT_THROW(fit_exponent(t, {1, 1, 1, 1, 1, 1}, 2.5, 10), ContractError);
  EXPECT_THROW(fit_exponent(t, {1, 1, 0, 1, 1, 1}, 0, 10), ContractError);
}

TEST(DecayCurve, Validate) {
  DecayCurve c{"x", {1, 2, 3}, {1, 1, 1}, {1, 1, 1}, 1.0};
  EXPECT_NO_THROW(c.validate());
  c.times[2] = 2.0;
  EXPECT_THROW(c.validate(), InvariantError);
  c.times[2] = 3.0;
  c.raw_sup[1] = -1.0;
  EXPECT_THROW(c.validate(), InvariantError);
}

TEST(Prop2, DecaysAtDimensionalRate) {
  const Grid g(1, 4096, 256.0);
  const Prop2Report r = prop2_decay_check(canonical_bump_data(g, 1.0), parse_times("8:64:0.5"), 8.0, 64.0);
  EXPECT_NEAR(r.report.fit.slope, -0.5, 0.1);
  EXPECT_GT(r.report.empirical_constant, 0.0);
  EXPECT_TRUE(std::isfinite(r.report.empirical_constant));
  EXPECT_NO_THROW(r.report.curve.validate());
}

TEST(Prop2, RejectsDataOutsideUnitBall) {
  const Grid g(1, 1024, 64.0);
  const CauchyData d{bump(g, {3.0, 0, 0}, 1.0), Field(g), 2.0, 1.0};
  EXPECT_THROW(prop2_decay_check(d, parse_times("8:16:1"), 8, 16), ConfigError);
}

TEST(LowFreq, ZeroDataIsSkippedAndScalingInvariant) {
  const Grid g(1, 2048, 128.0);
  const auto times = parse_times("4:20:1");
  const LowFreqResult z = lowfreq_check(Field(g), Field(g), 1.0, times, 4, 20);
  EXPECT_TRUE(z.phi.skipped);
  EXPECT_TRUE(z.dphi.skipped);
  const Field f = bump(g, kOrigin, 1.0);
  const LowFreqResult a = lowfreq_check(f, Field(g), 1.0, times, 4, 20);
  const LowFreqResult b = lowfreq_check(5.0 * f, Field(g), 1.0, times, 4, 20);
  EXPECT_FALSE(a.phi.skipped);
  EXPECT_NEAR(b.phi.empirical_constant, a.phi.empirical_constant, 1e-10 * a.phi.empirical_constant);
  EXPECT_NEAR(b.dphi.empirical_constant, a.dphi.empirical_constant, 1e-10 * a.dphi.empirical_constant);
}

TEST(HighFreq, ContractsAndDegenerateBand) {
  const Grid g(1, 1024, 64.0);
  const Field delta = point_source(g);
  EXPECT_THROW(highfreq_check(delta, Field(g), 1.0, 0, {2.0, 3.0}), ContractError);
  EXPECT_THROW(highfreq_check(delta, Field(g), 1.0, -1, {3.0}), ContractError);
  EXPECT_THROW(highfreq_check(delta, Field(g), 1.0, 99, {3.0}), ContractError);
  const HighFreqResult z = highfreq_check(Field(g), Field(g), 1.0, 1, {3.0, 4.0});
  EXPECT_TRUE(z.phi.skipped);
}

TEST(HighFreq, PointSourceConstantsArePositive) {
  const Grid g(1, 2048, 128.0);
  std::vector<double> times;
  for (double t = 2.25; t <= 40.0; t += 0.25) times.push_back(t);
  const HighFreqResult r = highfreq_check(point_source(g), Field(g), 1.0, 1, times);
  EXPECT_EQ(r.phi.inequality_id, "highfreq");
  EXPECT_EQ(r.dphi.inequality_id, "wavedecay");
  EXPECT_GT(r.phi.empirical_constant, 0.0);
  EXPECT_GT(r.dphi.empirical_constant, 0.0);
  EXPECT_LT(r.phi.empirical_constant, 10.0);
  EXPECT_LT(r.dphi.empirical_constant, 10.0);
}

TEST(Interpolation, ExponentRangeAndSharedEvolution) {
  const Grid g(1, 2048, 128.0);
  std::vector<double> times;
  for (double t = 0.25; t <= 30.0; t += 0.25) times.push_back(t);
  const Field delta = point_source(g);
  EXPECT_THROW(interpolation_check(delta, Field(g), 1.0, 1, 0.7, times), ContractError);
  EXPECT_THROW(interpolation_check(delta, Field(g), 1.0, 1, -0.1, times), ContractError);
  const auto both = interpolation_check(delta, Field(g), 1.0, 1, std::vector<double>{0.0, 0.5}, times);
  const DecayReport single = interpolation_check(delta, Field(g), 1.0, 1, 0.5, times);
  EXPECT_DOUBLE_EQ(both[1].empirical_constant, single.empirical_constant);
  EXPECT_EQ(both[0].curve.raw_sup, both[1].curve.raw_sup);
}

// In one dimension P_k phi = d_x phi' exactly, and |d phi'| >= |d_x phi'|.
TEST(WavedecayImplied, DominatesEndpointInterpolation) {
  const Grid g(1, 2048, 128.0);
  std::vector<double> times;
  for (double t = 0.25; t <= 30.0; t += 0.25) times.push_back(t);
  const Field delta = point_source(g);
  for (int k : {0, 2}) {
    const DecayReport imp = wavedecay_implied_check(delta, Field(g), 1.0, k, times);
    const DecayReport s0 = interpolation_check(delta, Field(g), 1.0, k, 0.0, times);
    EXPECT_GE(imp.empirical_constant, s0.empirical_constant * (1.0 - 1e-9)) << "k " << k;
    EXPECT_LE(imp.empirical_constant, 2.0 * s0.empirical_constant) << "k " << k;
  }
}

TEST(RefinedSups, AtLeastGridMaximum) {
  const Grid g(1, 512, 32.0);
  const Propagator p(canonical_bump_data(g, 1.0));
  const EvolvedState s = p.evolve(7.0);
  const SupSample r = refined_sups(p, 7.0);
  EXPECT_GE(r.phi, norm_linf(s.phi));
  EXPECT_LE(r.phi, 1.05 * norm_linf(s.phi));
}

}  // namespace
}  // namespace kgd
