#include "kgdisp/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "kgdisp/errors.hpp"

namespace kgd {

namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

void require_same_grid(const Grid& a, const Grid& b, const char* op) {
  if (!(a == b)) {
    throw ContractError(std::string(op) + ": fields live on different grids");
  }
}

}  // namespace

Grid::Grid(int dim, std::size_t points_per_axis, double box_length)
    : dim_(dim), n_(points_per_axis), length_(box_length) {
  if (dim < 1 || dim > kMaxDim) {
    throw ContractError("Grid: dimension must be 1, 2 or 3");
  }
  if (!is_power_of_two(points_per_axis) || points_per_axis < 2) {
    throw ContractError("Grid: points per axis must be a power of two >= 2");
  }
  if (!(box_length > 0.0) || !std::isfinite(box_length)) {
    throw ContractError("Grid: box length must be positive and finite");
  }
  spacing_ = length_ / static_cast<double>(n_);
  cell_volume_ = std::pow(spacing_, dim_);
  size_ = 1;
  for (int a = 0; a < dim_; ++a) size_ *= n_;
}

double Grid::coordinate(std::size_t j) const {
  // Written as h*(j - n/2) so the origin node is exactly 0.
  return spacing_ * (static_cast<double>(j) - static_cast<double>(n_ / 2));
}

Index Grid::unravel(std::size_t flat) const {
  Index idx{0, 0, 0};
  for (int a = dim_ - 1; a >= 0; --a) {
    idx[a] = flat % n_;
    flat /= n_;
  }
  return idx;
}

std::size_t Grid::ravel(const Index& idx) const {
  std::size_t flat = 0;
  for (int a = 0; a < dim_; ++a) flat = flat * n_ + idx[a];
  return flat;
}

Point Grid::position(std::size_t flat) const {
  const Index idx = unravel(flat);
  Point x{0.0, 0.0, 0.0};
  for (int a = 0; a < dim_; ++a) x[a] = coordinate(idx[a]);
  return x;
}

int Grid::signed_index(std::size_t j) const {
  return j < n_ / 2 ? static_cast<int>(j) : static_cast<int>(j) - static_cast<int>(n_);
}

double Grid::wavenumber(std::size_t j) const {
  return 2.0 * std::numbers::pi * signed_index(j) / length_;
}

double Grid::odd_wavenumber(std::size_t j) const {
  return is_nyquist(j) ? 0.0 : wavenumber(j);
}

Point Grid::frequency(std::size_t flat) const {
  const Index idx = unravel(flat);
  Point xi{0.0, 0.0, 0.0};
  for (int a = 0; a < dim_; ++a) xi[a] = wavenumber(idx[a]);
  return xi;
}

double Grid::frequency_norm(std::size_t flat) const {
  const Point xi = frequency(flat);
  double s = 0.0;
  for (int a = 0; a < dim_; ++a) s += xi[a] * xi[a];
  return std::sqrt(s);
}

double Grid::nyquist() const { return std::numbers::pi / spacing_; }

double Grid::max_frequency() const { return std::sqrt(static_cast<double>(dim_)) * nyquist(); }

std::size_t Grid::conjugate_index(std::size_t flat) const {
  Index idx = unravel(flat);
  for (int a = 0; a < dim_; ++a) idx[a] = (n_ - idx[a]) % n_;
  return ravel(idx);
}

bool Grid::operator==(const Grid& other) const {
  return dim_ == other.dim_ && n_ == other.n_ && length_ == other.length_;
}

Field::Field(Grid grid) : grid_(grid), values_(grid.size(), 0.0) {}

Field::Field(Grid grid, std::vector<double> values) : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.size()) {
    throw ContractError("Field: value count does not match grid size");
  }
}

Field& Field::operator+=(const Field& other) {
  require_same_grid(grid_, other.grid_, "Field +=");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  return *this;
}

Field& Field::operator-=(const Field& other) {
  require_same_grid(grid_, other.grid_, "Field -=");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
  return *this;
}

Field& Field::operator*=(double c) {
  for (double& v : values_) v *= c;
  return *this;
}

void Field::require_finite(const char* context) const {
  if (!std::all_of(values_.begin(), values_.end(), [](double v) { return std::isfinite(v); })) {
    throw InvariantError(std::string(context) + ": non-finite value in field");
  }
}

Field operator+(Field a, const Field& b) { return a += b; }
Field operator-(Field a, const Field& b) { return a -= b; }
Field operator*(double c, Field a) { return a *= c; }
Field operator*(Field a, double c) { return a *= c; }

Field multiply(const Field& a, const Field& b) {
  require_same_grid(a.grid(), b.grid(), "multiply");
  Field out(a.grid());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
  return out;
}

Field multiply_by_coordinate(const Field& f, int axis) {
  const Grid& g = f.grid();
  if (axis < 0 || axis >= g.dim()) throw ContractError("multiply_by_coordinate: axis out of range");
  Field out(g);
  for (std::size_t i = 0; i < f.size(); ++i) {
    out[i] = g.coordinate(g.unravel(i)[axis]) * f[i];
  }
  return out;
}

SpectralField::SpectralField(Grid grid) : grid_(grid), coeffs_(grid.size()) {}

SpectralField::SpectralField(Grid grid, std::vector<std::complex<double>> coefficients)
    : grid_(grid), coeffs_(std::move(coefficients)) {
  if (coeffs_.size() != grid_.size()) {
    throw ContractError("SpectralField: coefficient count does not match grid size");
  }
}

double SpectralField::hermitian_defect() const {
  double scale = 0.0;
  double defect = 0.0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    scale = std::max(scale, std::abs(coeffs_[i]));
    const std::size_t j = grid_.conjugate_index(i);
    defect = std::max(defect, std::abs(coeffs_[j] - std::conj(coeffs_[i])));
  }
  return scale > 0.0 ? defect / scale : 0.0;
}

}  // namespace kgd
