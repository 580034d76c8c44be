#pragma once

// Forward Laguerre transform through the transport equation v_t - v_x = 0.
// With f~_j the DFT of f on [0, T), the coefficients are
//
//   a_m = (1/T) sum_j w_j Re[ base(k_j) ratio(k_j)^m f~_j e^{-i k_j delta} ]
//
// base = sqrt(eta) / (eta/2 - ik), ratio = (-eta/2 - ik) / (eta/2 - ik),
// w_0 = 1, w_j = 2, and w = 1 for the Nyquist bin of an even-length signal.
// |ratio| = 1, so nothing grows or decays with m.

#include <complex>
#include <cstddef>
#include <limits>
#include <vector>

#include "lagt/series_operators.hpp"
#include "lagt/spectrum_truncation.hpp"
#include "lagt/types.hpp"

namespace lagt {

inline constexpr std::size_t kAllFrequencies = std::numeric_limits<std::size_t>::max();

struct SpectralMultiplier {
    std::complex<double> base;
    std::complex<double> ratio;
};

SpectralMultiplier spectral_multiplier(double eta, double k);

/// f~_j = h sum_i f_i e^{-2 pi i ij / N_s}, j = 0..n_freq (default N_s / 2).
template <Scalar Real>
FourierSpectrum<Real> forward_dft(const SampledSignal<Real>& signal, std::size_t n_freq = kAllFrequencies);

/// w_j / T for each bin of the spectrum.
std::vector<double> synthesis_weights(std::size_t n_freq, std::size_t sample_count, double duration);

/// a_0..a_n. The multipliers are generated by the m-recursion in double
/// precision; products with the spectrum and the sums over j run in Real.
/// A positive eval_offset delays the (periodic) signal by that amount.
template <Scalar Real>
LaguerreSpectrum<Real> coefficients_via_transport(const FourierSpectrum<Real>& spectrum, double eta, std::size_t n,
                                                  double eval_offset = 0.0);

inline constexpr std::size_t kDefaultMatrixGuard = std::size_t{1} << 31;

/// Rows m = 0..n, columns j = 0..n_freq, row-major. Plain entries are
/// sqrt(eta) (ik_j - eta/2)^m / (ik_j + eta/2)^{m+1}, the complex conjugate
/// of the transport multiplier, so a_m = sum_j (w_j/T) Re(M_mj conj(f~_j)).
template <Scalar Real>
struct TransformMatrix {
    std::vector<std::complex<Real>> entries;
    std::size_t rows = 0;
    std::size_t cols = 0;
    double eta = 1.0;
    double duration = 0.0;
    bool modified = false;

    std::complex<Real> operator()(std::size_t m, std::size_t j) const { return entries[m * cols + j]; }
};

struct TransformOptions {
    /// Raised-cosine decay applied over this fraction of T before transforming.
    double taper_fraction = 0.05;
    /// Q^2 sums over summation_factor * (n + 1) coefficients, the tail faded
    /// by the summation window.
    std::size_t summation_factor = 4;
    /// Width of the quarter-period cos^2 ramp used for signals with f(0) != 0.
    double ramp_width = 0.0;
    std::size_t matrix_guard = kDefaultMatrixGuard;
    OperatorContext context{};
};

/// Entries are computed in double in polar form and rounded to Real.
/// modified = true applies Q^2{.; duration} to every column.
template <Scalar Real>
TransformMatrix<Real> build_transform_matrix(double eta, std::size_t n, std::size_t n_freq, double duration,
                                             bool modified, const TransformOptions& options = {});

/// a = M f~ under the convention above.
template <Scalar Real>
LaguerreSpectrum<Real> apply_matrix(const TransformMatrix<Real>& matrix, const FourierSpectrum<Real>& spectrum);

template <Scalar Real>
struct Algorithm1Result {
    LaguerreSpectrum<Real> spectrum;  // a_0..a_m0
    LaguerreSpectrum<Real> full;      // a_0..a_n before truncation
    TruncationReport report;
};

/// Zero-extend to extension_factor * T, transform, and keep the leading
/// coefficients whose energy matches the original signal.
template <Scalar Real>
Algorithm1Result<Real> algorithm1(const SampledSignal<Real>& signal, double eta, std::size_t n,
                                  std::size_t extension_factor, const TransformOptions& options = {});

/// Precomputed Q^2-modified matrix applied to the DFT of the signal.
template <Scalar Real>
LaguerreSpectrum<Real> algorithm2(const SampledSignal<Real>& signal, const TransformMatrix<Real>& matrix,
                                  const TransformOptions& options = {});

/// Plain transform followed by Q^2{.; T}. With options.ramp_width > 0 a ramp
/// is appended to the signal and removed again by Q{Q{.; T + width}; T}.
template <Scalar Real>
LaguerreSpectrum<Real> algorithm3(const SampledSignal<Real>& signal, double eta, std::size_t n,
                                  const TransformOptions& options = {});

}  // namespace lagt
