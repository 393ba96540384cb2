#pragma once

#include <array>
#include <functional>
#include <vector>

#include "kgdisp/grid.hpp"

namespace kgd {

/// Discrete Fourier transform on the grid.
///
/// Normalization: the forward transform is the unnormalized sum
///   F(xi) = sum_x f(x) exp(-i xi.(x - x0)),  x0 = (-L/2, ..., -L/2),
/// and the inverse carries the factor 1/N^d. With this convention Parseval
/// reads  h^d sum |f|^2 = (h^d / N^d) sum |F|^2  and  F(xi) * h^d  approximates
/// the continuous transform of f shifted by x0. Backed by FFTW.
SpectralField forward_transform(const Field& f);
Field inverse_transform(const SpectralField& spectrum);
/// Inverse transform that keeps the full complex result (no real part taken).
std::vector<std::complex<double>> inverse_transform_complex(const SpectralField& spectrum);

/// Multiply the spectrum pointwise by symbol(xi) and transform back.
/// The symbol must be even in xi for the result to be real.
Field apply_multiplier(const Field& f, const std::function<double(const Point&)>& symbol);
SpectralField apply_multiplier(const SpectralField& spectrum,
                               const std::function<double(const Point&)>& symbol);

/// d f / d x^axis via the i*xi multiplier (Nyquist mode zeroed).
Field spatial_derivative(const Field& f, int axis);
SpectralField differentiate(const SpectralField& spectrum, int axis);

using MultiIndex = std::array<int, kMaxDim>;

/// All multi-indices alpha in N^dim with |alpha| == order, in lexicographic order.
std::vector<MultiIndex> multi_indices(int dim, int order);
/// partial^alpha f computed spectrally.
Field derivative_multi(const Field& f, const MultiIndex& alpha);
SpectralField differentiate_multi(const SpectralField& spectrum, const MultiIndex& alpha);

/// Spectral Laplacian.
Field laplacian(const Field& f);

double norm_l1(const Field& f);
double norm_l2(const Field& f);
double norm_linf(const Field& f);
/// (h^d / N^d  sum (1 + |xi|^2)^s |F|^2)^(1/2), the discrete H^s norm.
double norm_sobolev_h(const Field& f, double s);
/// sum over |alpha| <= k of the L1 norm of partial^alpha f.
double norm_sobolev_w_k1(const Field& f, int k);
/// L2 norm evaluated on the frequency side; equals norm_l2 by Parseval.
double norm_l2_spectral(const SpectralField& spectrum);

struct Norms {
  double l1;
  double l2;
  double linf;
};

Norms basic_norms(const Field& f);

}  // namespace kgd
