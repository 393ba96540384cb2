#include "kgdisp/run_config.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "kgdisp/errors.hpp"

namespace kgd {
namespace {

bool mentions(const std::vector<std::string>& v, const std::string& needle) {
  for (const auto& s : v) {
    if (s.find(needle) != std::string::npos) return true;
  }
  return false;
}

TEST(RunConfig, DefaultsAreValid) {
  const RunConfig c;
  EXPECT_TRUE(c.violations().empty());
  EXPECT_EQ(c.times.front(), 8.0);
  EXPECT_EQ(c.times.back(), 64.0);
  EXPECT_EQ(c.times.size(), 113u);
  EXPECT_EQ(c.max_time(), 64.0);
}

TEST(RunConfig, AntiWraparoundBound) {
  RunConfig c;
  c.box_length = 8.0;
  c.times = parse_times("0:64:1");
  const auto v = c.violations();
  EXPECT_TRUE(mentions(v, "anti-wraparound"));
  EXPECT_THROW(c.validate(), ConfigError);
  // Exactly at the bound is accepted.
  c.box_length = 2.0 * (1.0 + 64.0 + 2.0);
  c.grid_n = 4096;
  c.taus = {2.0, 4.0};
  EXPECT_FALSE(mentions(c.violations(), "anti-wraparound"));
}

TEST(RunConfig, ReportsEveryViolation) {
  RunConfig c;
  c.dim = 5;
  c.grid_n = 100;
  c.mass = 2.0;
  c.suite = "nope";
  c.data = "other";
  c.times = {3.0, 2.0};
  const auto v = c.violations();
  EXPECT_TRUE(mentions(v, "dim"));
  EXPECT_TRUE(mentions(v, "power of two"));
  EXPECT_TRUE(mentions(v, "mass m0"));
  EXPECT_TRUE(mentions(v, "unknown suite"));
  EXPECT_TRUE(mentions(v, "data must be"));
  EXPECT_TRUE(mentions(v, "increase strictly"));
  try {
    c.validate();
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find("unknown suite"), std::string::npos);
    EXPECT_NE(what.find("power of two"), std::string::npos);
  }
}

TEST(RunConfig, BandsAndTausChecked) {
  RunConfig c;
  c.bands = {0, 40};
  c.taus = {-1.0, 40.0};
  const auto v = c.violations();
  EXPECT_TRUE(mentions(v, "band 40"));
  EXPECT_TRUE(mentions(v, "tau must be positive"));
  EXPECT_TRUE(mentions(v, "tau = 40"));
}

TEST(RunConfig, MassZeroAllowed) {
  RunConfig c;
  c.mass = 0.0;
  EXPECT_TRUE(c.violations().empty());
}

TEST(ParseTimes, RangesAndLists) {
  EXPECT_EQ(parse_times("1:2:0.5"), (std::vector<double>{1.0, 1.5, 2.0}));
  EXPECT_EQ(parse_times(" 1, 4 ,9"), (std::vector<double>{1.0, 4.0, 9.0}));
  EXPECT_EQ(parse_times("0:0.3:0.1").size(), 4u);
  EXPECT_THROW(parse_times("1:2"), ConfigError);
  EXPECT_THROW(parse_times("2:1:0.5"), ConfigError);
  EXPECT_THROW(parse_times("a,b"), ConfigError);
  EXPECT_THROW(parse_int_list("1,2.5"), ConfigError);
  EXPECT_EQ(parse_int_list("-1,0,3"), (std::vector<int>{-1, 0, 3}));
}

TEST(LoadConfigFile, ReadsAllSections) {
  const auto path = std::filesystem::temp_directory_path() / "kgdisp_cfg_test.ini";
  {
    std::ofstream os(path);
    os << "[grid]\ndim = 2\nn = 256\nbox_length = 200\n"
       << "[physics]\nmass = 0.5\nmass_bound = 2\nsupport_radius = 0.8\n"
       << "[run]\nsuite = energy\nbands = 0,1\ntaus = 2, 3\ntimes = 4:8:2\nfit_window = 4, 8\n"
       << "seed = 17\nsamples = 3\ndata = zero\nout = somewhere\n";
  }
  RunConfig c;
  load_config_file(path.string(), c);
  std::filesystem::remove(path);
  EXPECT_EQ(c.dim, 2);
  EXPECT_EQ(c.grid_n, 256u);
  EXPECT_EQ(c.box_length, 200.0);
  EXPECT_EQ(c.mass, 0.5);
  EXPECT_EQ(c.mass_bound, 2.0);
  EXPECT_EQ(c.support_radius, 0.8);
  EXPECT_EQ(c.suite, "energy");
  EXPECT_EQ(c.bands, (std::vector<int>{0, 1}));
  EXPECT_EQ(c.taus, (std::vector<double>{2.0, 3.0}));
  EXPECT_EQ(c.times, (std::vector<double>{4.0, 6.0, 8.0}));
  EXPECT_EQ(c.fit_lo, 4.0);
  EXPECT_EQ(c.seed, 17u);
  EXPECT_EQ(c.samples, 3u);
  EXPECT_EQ(c.data, "zero");
  EXPECT_EQ(c.out_dir, "somewhere");
  EXPECT_TRUE(c.violations().empty());
}

TEST(LoadConfigFile, MissingFileIsConfigError) {
  RunConfig c;
  EXPECT_THROW(load_config_file("/nonexistent/kgdisp.ini", c), ConfigError);
}

}  // namespace
}  // namespace kgd
