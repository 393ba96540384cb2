#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace kgd {

inline constexpr int kMaxDim = 3;

using Point = std::array<double, kMaxDim>;
using Index = std::array<std::size_t, kMaxDim>;

/// Periodic sampling lattice on [-L/2, L/2)^d with n points per axis.
///
/// Values are stored row-major with axis 0 slowest. Node j on an axis sits at
/// x_j = -L/2 + j*h, so the node with j = n/2 is the origin. The dual lattice
/// uses the symmetric index range [-n/2, n/2): wavenumber(j) = 2*pi*j/L for
/// j < n/2 and 2*pi*(j-n)/L otherwise.
class Grid {
 public:
  Grid(int dim, std::size_t points_per_axis, double box_length);

  int dim() const { return dim_; }
  std::size_t points_per_axis() const { return n_; }
  double box_length() const { return length_; }
  double spacing() const { return spacing_; }
  double cell_volume() const { return cell_volume_; }
  std::size_t size() const { return size_; }

  double coordinate(std::size_t j) const;
  Point position(std::size_t flat) const;
  Index unravel(std::size_t flat) const;
  std::size_t ravel(const Index& idx) const;

  int signed_index(std::size_t j) const;
  bool is_nyquist(std::size_t j) const { return j == n_ / 2; }
  double wavenumber(std::size_t j) const;
  /// Wavenumber to use in odd multipliers (i*xi): zero at the Nyquist index so
  /// real fields stay real.
  double odd_wavenumber(std::size_t j) const;
  Point frequency(std::size_t flat) const;
  double frequency_norm(std::size_t flat) const;
  double nyquist() const;
  /// Largest |xi| on the dual lattice (the corner frequency for d > 1).
  double max_frequency() const;
  /// Flat index of the mode at -xi.
  std::size_t conjugate_index(std::size_t flat) const;

  bool operator==(const Grid& other) const;

 private:
  int dim_;
  std::size_t n_;
  double length_;
  double spacing_;
  double cell_volume_;
  std::size_t size_;
};

/// Real scalar samples on a grid.
class Field {
 public:
  explicit Field(Grid grid);
  Field(Grid grid, std::vector<double> values);

  const Grid& grid() const { return grid_; }
  std::span<const double> values() const { return values_; }
  std::span<double> values() { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }
  double& operator[](std::size_t i) { return values_[i]; }
  std::size_t size() const { return values_.size(); }

  Field& operator+=(const Field& other);
  Field& operator-=(const Field& other);
  Field& operator*=(double c);

  /// Throws InvariantError if any value is NaN or infinite.
  void require_finite(const char* context) const;

 private:
  Grid grid_;
  std::vector<double> values_;
};

Field operator+(Field a, const Field& b);
Field operator-(Field a, const Field& b);
Field operator*(double c, Field a);
Field operator*(Field a, double c);

/// Pointwise product.
Field multiply(const Field& a, const Field& b);
/// Multiply by the centered coordinate x^axis.
Field multiply_by_coordinate(const Field& f, int axis);

/// Complex coefficients on the dual lattice of a grid (unnormalized DFT).
class SpectralField {
 public:
  explicit SpectralField(Grid grid);
  SpectralField(Grid grid, std::vector<std::complex<double>> coefficients);

  const Grid& grid() const { return grid_; }
  std::span<const std::complex<double>> coefficients() const { return coeffs_; }
  std::span<std::complex<double>> coefficients() { return coeffs_; }
  std::complex<double> operator[](std::size_t i) const { return coeffs_[i]; }
  std::complex<double>& operator[](std::size_t i) { return coeffs_[i]; }
  std::size_t size() const { return coeffs_.size(); }

  /// max |c(-xi) - conj(c(xi))| / max |c|; zero for spectra of real fields.
  double hermitian_defect() const;

 private:
  Grid grid_;
  std::vector<std::complex<double>> coeffs_;
};

/// s_d = floor(d/2) + 1, the number of boosts the global Sobolev bound needs.
struct SobolevOrder {
  int dim;
  int s_d;

  static SobolevOrder for_dimension(int dim) { return {dim, dim / 2 + 1}; }
};

}  // namespace kgd
