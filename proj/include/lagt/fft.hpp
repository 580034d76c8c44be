#pragma once

// Thin FFT layer over FFTW. Plans are cached per (kind, length, precision);
// planning is serialized, execution is reentrant.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "lagt/types.hpp"

namespace lagt::fft {

std::size_t next_pow2(std::size_t n);

/// Unnormalized forward real-to-complex transform; returns n/2 + 1 bins.
template <Scalar Real>
std::vector<std::complex<Real>> real_forward(std::span<const Real> input);

/// Unnormalized inverse of real_forward for a length-n real sequence.
template <Scalar Real>
std::vector<Real> real_inverse(std::span<const std::complex<Real>> half_spectrum, std::size_t n);

/// First out_len entries of the linear convolution a * b, via a
/// power-of-two FFT of length >= len(a) + len(b) - 1.
template <Scalar Real>
std::vector<Real> linear_convolution(std::span<const Real> a, std::span<const Real> b, std::size_t out_len);

/// c_j = sum_m d_m table_{m+j}, j < out_len; table must hold at least
/// len(d) + out_len - 1 entries.
template <Scalar Real>
std::vector<Real> correlation(std::span<const Real> d, std::span<const Real> table, std::size_t out_len);

/// O(n^2) reference versions, kept for cross-checks.
template <Scalar Real>
std::vector<Real> direct_convolution(std::span<const Real> a, std::span<const Real> b, std::size_t out_len);

template <Scalar Real>
std::vector<Real> direct_correlation(std::span<const Real> d, std::span<const Real> table, std::size_t out_len);

}  // namespace lagt::fft
