#include "kgdisp/littlewood_paley.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <cmath>
#include <string>

#include "kgdisp/errors.hpp"
#include "kgdisp/spectral.hpp"

namespace kgd {

namespace {

double mollifier(double s) {
  const double q = 1.0 - s * s;
  return q > 0.0 ? std::exp(-1.0 / q) : 0.0;
}

// Cumulative integral of the mollifier on a uniform table over [-1, 1],
// normalized to 1 at the right end.
class StepTable {
 public:
  static constexpr int kIntervals = 4096;

  StepTable() : values_(kIntervals + 1, 0.0) {
    const double width = 2.0 / kIntervals;
    double acc = 0.0;
    for (int j = 0; j < kIntervals; ++j) {
      const double a = -1.0 + j * width;
      acc += boost::math::quadrature::gauss<double, 20>::integrate(mollifier, a, a + width);
      values_[j + 1] = acc;
    }
    total_ = acc;
    for (double& v : values_) v /= total_;
  }

  static const StepTable& instance() {
    static const StepTable table;
    return table;
  }

  // Normalized cumulative integral at s in [-1, 1].
  double cumulative(double s) const {
    if (s <= -1.0) return 0.0;
    if (s >= 1.0) return 1.0;
    const double width = 2.0 / kIntervals;
    const double pos = (s + 1.0) / width;
    const int j = std::min(static_cast<int>(pos), kIntervals - 1);
    const double u = pos - j;
    const double s0 = -1.0 + j * width;
    const double y0 = values_[j];
    const double y1 = values_[j + 1];
    const double m0 = mollifier(s0) / total_ * width;
    const double m1 = mollifier(s0 + width) / total_ * width;
    const double u2 = u * u;
    const double u3 = u2 * u;
    return (2 * u3 - 3 * u2 + 1) * y0 + (u3 - 2 * u2 + u) * m0 + (-2 * u3 + 3 * u2) * y1 +
           (u3 - u2) * m1;
  }

 private:
  std::vector<double> values_;
  double total_ = 1.0;
};

}  // namespace

double smooth_step(double u) {
  if (u <= 0.0) return 1.0;
  if (u >= 1.0) return 0.0;
  return std::clamp(1.0 - StepTable::instance().cumulative(2.0 * u - 1.0), 0.0, 1.0);
}

double low_pass_profile(double r) { return smooth_step(2.0 * r - 1.0); }

int LPBank::k_max_for(const Grid& grid) {
  const double top = grid.max_frequency();
  int k = 0;
  while (std::ldexp(1.0, k) <= top) ++k;
  return k;  // largest k with 2^(k-1) <= top
}

LPBank::LPBank(const Grid& grid) : grid_(grid), k_max_(k_max_for(grid)) {}

void LPBank::require_band(int k) const {
  if (k < -1 || k > k_max_) {
    throw ContractError("LPBank: band " + std::to_string(k) + " outside [-1, " +
                        std::to_string(k_max_) + "]");
  }
}

double LPBank::symbol(int k, double r) const {
  require_band(k);
  if (k == -1) return low_pass_profile(r);
  const double outer = low_pass_profile(std::ldexp(r, -(k + 1)));
  const double inner = low_pass_profile(std::ldexp(r, -k));
  return std::max(0.0, outer - inner);
}

SpectralField LPBank::project(const SpectralField& spectrum, int k) const {
  require_band(k);
  if (!(spectrum.grid() == grid_)) throw ContractError("LPBank::project: grid mismatch");
  SpectralField out = spectrum;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] *= symbol(k, grid_.frequency_norm(i));
  return out;
}

Field LPBank::project(const Field& f, int k) const {
  return inverse_transform(project(forward_transform(f), k));
}

double LPBank::completeness_residual() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < grid_.size(); ++i) {
    const double r = grid_.frequency_norm(i);
    double s = 0.0;
    for (int k = -1; k <= k_max_; ++k) s += symbol(k, r);
    worst = std::max(worst, std::abs(s - 1.0));
  }
  return worst;
}

}  // namespace kgd
