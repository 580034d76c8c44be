#pragma once

// Operators on Laguerre coefficient sequences, all O(n log n) through FFT
// convolution/correlation against a table l_j(eta tau):
//
//   shift       S{a; tau}_m = sum_{j<=m} (a_{m-j} - a_{m-j-1}) l_j(eta tau)   -> f(t - tau)
//   conjugate   Q{a; tau}_j = sum_m (a_m - a_{m-1}) l_{m+j}(eta tau)          -> f(tau - t) H(tau - t)
//   truncate    Q{Q{a; tau}; tau}                                             -> f(t) H(tau - t)
//
// with a_{-1} = 0. Under the orthonormal basis phi_m = sqrt(eta) e^{-eta t/2} L_m(eta t)
// both operators have unit prefactor (shift by zero is the identity).

#include <cstddef>
#include <map>
#include <memory>
#include <shared_mutex>
#include <span>
#include <utility>
#include <vector>

#include "lagt/types.hpp"

namespace lagt {

struct OperatorParams {
    double tau = 0.0;
    /// Length of the returned sequence; 0 keeps the input length.
    std::size_t output_len = 0;
};

/// Double-precision tables l_j(x), j < length, keyed by (x, length).
/// Population is synchronized; returned tables are immutable.
class LaguerreTableCache {
public:
    std::shared_ptr<const std::vector<double>> get(double argument, std::size_t length, bool allow_shift_doubling = true);
    std::size_t size() const;

private:
    mutable std::shared_mutex mutex_;
    std::map<std::pair<double, std::size_t>, std::shared_ptr<const std::vector<double>>> tables_;
};

struct OperatorContext {
    LaguerreTableCache* cache = nullptr;
    bool allow_shift_doubling = true;
};

/// How the infinite correlation sum of a conjugation is evaluated.
/// Input coefficients with index >= window_start are faded to zero by a
/// raised cosine that vanishes just past the last input entry; window_start
/// at or beyond the input length means a plain finite sum.
struct ConjugationOptions {
    std::size_t output_len = 0;
    std::size_t window_start = static_cast<std::size_t>(-1);
    OperatorContext context{};
};

template <Scalar Real>
LaguerreSpectrum<Real> shift(const LaguerreSpectrum<Real>& a, const OperatorParams& params,
                             const OperatorContext& context = {});

template <Scalar Real>
LaguerreSpectrum<Real> conjugate(const LaguerreSpectrum<Real>& a, const OperatorParams& params,
                                 const OperatorContext& context = {});

/// Q^2{a; tau}: reconstruction vanishes for t > tau.
template <Scalar Real>
LaguerreSpectrum<Real> truncate_after(const LaguerreSpectrum<Real>& a, double tau, const ConjugationOptions& options = {});

/// Q{Q{a; first_tau}; second_tau}. With a ramp of width d prepended to a
/// signal of length T, (T + d, T) removes both the ramp and everything past T.
template <Scalar Real>
LaguerreSpectrum<Real> double_conjugate(const LaguerreSpectrum<Real>& a, double first_tau, double second_tau,
                                        const ConjugationOptions& options = {});

template <Scalar Real>
LaguerreSpectrum<Real> zero_pad(const LaguerreSpectrum<Real>& a, std::size_t new_len);

/// Raised-cosine summation weights for a sequence of `length` entries.
std::vector<double> summation_window(std::size_t length, std::size_t window_start);

/// O(n^2) shift and conjugation on double sequences, for cross-checks.
std::vector<double> shift_direct(std::span<const double> a, std::span<const double> table);
std::vector<double> conjugate_direct(std::span<const double> a, std::span<const double> table, std::size_t output_len);

}  // namespace lagt
