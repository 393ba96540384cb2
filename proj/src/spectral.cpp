#include "kgdisp/spectral.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <tuple>

#include "kgdisp/errors.hpp"

namespace kgd {

namespace {

// FFTW planning is not thread-safe, execution on new arrays is. Plans are made
// once per (dim, n, direction) with FFTW_UNALIGNED so they can be reused on any
// std::vector buffer through fftw_execute_dft.
class PlanCache {
 public:
  static PlanCache& instance() {
    static PlanCache cache;
    return cache;
  }

  fftw_plan get(int dim, std::size_t n, int sign) {
    std::lock_guard<std::mutex> lock(mutex_);
    const auto key = std::make_tuple(dim, n, sign);
    auto it = plans_.find(key);
    if (it != plans_.end()) return it->second;

    std::size_t total = 1;
    for (int a = 0; a < dim; ++a) total *= n;
    std::vector<std::complex<double>> scratch(total);
    int dims[kMaxDim];
    for (int a = 0; a < dim; ++a) dims[a] = static_cast<int>(n);
    auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
    fftw_plan plan =
        fftw_plan_dft(dim, dims, buf, buf, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (plan == nullptr) throw InvariantError("FFTW failed to create a plan");
    plans_.emplace(key, plan);
    return plan;
  }

  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

 private:
  std::mutex mutex_;
  std::map<std::tuple<int, std::size_t, int>, fftw_plan> plans_;
};

void execute(const Grid& grid, std::vector<std::complex<double>>& data, int sign) {
  fftw_plan plan = PlanCache::instance().get(grid.dim(), grid.points_per_axis(), sign);
  auto* buf = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(plan, buf, buf);
}

// (i xi_a)^p with the Nyquist wavenumber dropped for odd p so that real
// fields map to real fields.
std::complex<double> derivative_factor(const Grid& g, std::size_t j, int p) {
  if (p == 0) return 1.0;
  const double xi = (p % 2 == 1) ? g.odd_wavenumber(j) : g.wavenumber(j);
  std::complex<double> out = 1.0;
  for (int q = 0; q < p; ++q) out *= std::complex<double>(0.0, xi);
  return out;
}

}  // namespace

SpectralField forward_transform(const Field& f) {
  if (f.size() != f.grid().size()) throw ContractError("forward_transform: size mismatch");
  std::vector<std::complex<double>> data(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) data[i] = f[i];
  execute(f.grid(), data, FFTW_FORWARD);
  return SpectralField(f.grid(), std::move(data));
}

std::vector<std::complex<double>> inverse_transform_complex(const SpectralField& spectrum) {
  if (spectrum.size() != spectrum.grid().size()) {
    throw ContractError("inverse_transform: size mismatch");
  }
  std::vector<std::complex<double>> data(spectrum.coefficients().begin(),
                                         spectrum.coefficients().end());
  execute(spectrum.grid(), data, FFTW_BACKWARD);
  const double scale = 1.0 / static_cast<double>(spectrum.size());
  for (auto& c : data) c *= scale;
  return data;
}

Field inverse_transform(const SpectralField& spectrum) {
  const auto data = inverse_transform_complex(spectrum);
  Field out(spectrum.grid());
  for (std::size_t i = 0; i < data.size(); ++i) out[i] = data[i].real();
  out.require_finite("inverse_transform");
  return out;
}

SpectralField apply_multiplier(const SpectralField& spectrum,
                               const std::function<double(const Point&)>& symbol) {
  SpectralField out = spectrum;
  const Grid& g = spectrum.grid();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] *= symbol(g.frequency(i));
  return out;
}

Field apply_multiplier(const Field& f, const std::function<double(const Point&)>& symbol) {
  return inverse_transform(apply_multiplier(forward_transform(f), symbol));
}

SpectralField differentiate(const SpectralField& spectrum, int axis) {
  MultiIndex alpha{0, 0, 0};
  if (axis < 0 || axis >= spectrum.grid().dim()) {
    throw ContractError("spatial_derivative: axis out of range");
  }
  alpha[axis] = 1;
  return differentiate_multi(spectrum, alpha);
}

Field spatial_derivative(const Field& f, int axis) {
  if (axis < 0 || axis >= f.grid().dim()) {
    throw ContractError("spatial_derivative: axis out of range");
  }
  return inverse_transform(differentiate(forward_transform(f), axis));
}

std::vector<MultiIndex> multi_indices(int dim, int order) {
  if (dim < 1 || dim > kMaxDim || order < 0) throw ContractError("multi_indices: bad arguments");
  std::vector<MultiIndex> out;
  MultiIndex alpha{0, 0, 0};
  // Enumerate alpha_0 descending so the pure first-axis derivative comes first.
  std::function<void(int, int)> rec = [&](int axis, int remaining) {
    if (axis == dim - 1) {
      alpha[axis] = remaining;
      out.push_back(alpha);
      return;
    }
    for (int p = remaining; p >= 0; --p) {
      alpha[axis] = p;
      rec(axis + 1, remaining - p);
    }
    alpha[axis] = 0;
  };
  rec(0, order);
  return out;
}

SpectralField differentiate_multi(const SpectralField& spectrum, const MultiIndex& alpha) {
  const Grid& g = spectrum.grid();
  for (int a = 0; a < kMaxDim; ++a) {
    if (alpha[a] < 0 || (a >= g.dim() && alpha[a] != 0)) {
      throw ContractError("derivative_multi: multi-index does not match grid dimension");
    }
  }
  SpectralField out = spectrum;
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Index idx = g.unravel(i);
    std::complex<double> factor = 1.0;
    for (int a = 0; a < g.dim(); ++a) factor *= derivative_factor(g, idx[a], alpha[a]);
    out[i] *= factor;
  }
  return out;
}

Field derivative_multi(const Field& f, const MultiIndex& alpha) {
  return inverse_transform(differentiate_multi(forward_transform(f), alpha));
}

Field laplacian(const Field& f) {
  return apply_multiplier(f, [&](const Point& xi) {
    double s = 0.0;
    for (int a = 0; a < f.grid().dim(); ++a) s += xi[a] * xi[a];
    return -s;
  });
}

double norm_l1(const Field& f) {
  double s = 0.0;
  for (double v : f.values()) s += std::abs(v);
  return s * f.grid().cell_volume();
}

double norm_l2(const Field& f) {
  double s = 0.0;
  for (double v : f.values()) s += v * v;
  return std::sqrt(s * f.grid().cell_volume());
}

double norm_linf(const Field& f) {
  double m = 0.0;
  for (double v : f.values()) m = std::max(m, std::abs(v));
  return m;
}

double norm_l2_spectral(const SpectralField& spectrum) {
  double s = 0.0;
  for (const auto& c : spectrum.coefficients()) s += std::norm(c);
  const Grid& g = spectrum.grid();
  return std::sqrt(s * g.cell_volume() / static_cast<double>(g.size()));
}

double norm_sobolev_h(const Field& f, double s) {
  if (!(s >= 0.0)) throw ContractError("norm_sobolev_h: order must be nonnegative");
  const SpectralField spec = forward_transform(f);
  const Grid& g = f.grid();
  double acc = 0.0;
  for (std::size_t i = 0; i < spec.size(); ++i) {
    const double r = g.frequency_norm(i);
    acc += std::pow(1.0 + r * r, s) * std::norm(spec[i]);
  }
  return std::sqrt(acc * g.cell_volume() / static_cast<double>(g.size()));
}

double norm_sobolev_w_k1(const Field& f, int k) {
  const int d = f.grid().dim();
  if (k < 0 || k > d + 2) throw ContractError("norm_sobolev_w_k1: order must lie in [0, d+2]");
  const SpectralField spec = forward_transform(f);
  double total = norm_l1(f);
  for (int order = 1; order <= k; ++order) {
    for (const MultiIndex& alpha : multi_indices(d, order)) {
      total += norm_l1(inverse_transform(differentiate_multi(spec, alpha)));
    }
  }
  return total;
}

Norms basic_norms(const Field& f) { return {norm_l1(f), norm_l2(f), norm_linf(f)}; }

}  // namespace kgd
