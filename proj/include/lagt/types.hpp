#pragma once

#include <cmath>
#include <complex>
#include <concepts>
#include <cstddef>
#include <numbers>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "lagt/errors.hpp"

namespace lagt {

/// Arithmetic width of data and accumulation on a transform path.
enum class Precision { f32, f64 };

Precision parse_precision(std::string_view text);
std::string_view to_string(Precision precision);

template <typename Real>
concept Scalar = std::same_as<Real, float> || std::same_as<Real, double>;

/// Uniformly sampled real signal on [0, T), T = size * step.
template <Scalar Real>
class SampledSignal {
public:
    SampledSignal() = default;

    SampledSignal(std::vector<Real> values, double step) : values_(std::move(values)), step_(step) {
        if (values_.size() < 2) throw InvalidArgument("a sampled signal needs at least two samples");
        if (!(step_ > 0.0) || !std::isfinite(step_)) throw InvalidArgument("sampling step must be positive");
        for (Real v : values_) {
            if (!std::isfinite(v)) throw InvalidArgument("signal contains a non-finite sample");
        }
    }

    std::span<const Real> values() const noexcept { return values_; }
    double step() const noexcept { return step_; }
    std::size_t size() const noexcept { return values_.size(); }
    double duration() const noexcept { return static_cast<double>(values_.size()) * step_; }
    double time(std::size_t i) const noexcept { return static_cast<double>(i) * step_; }

    std::vector<Real> release() && { return std::move(values_); }

private:
    std::vector<Real> values_;
    double step_ = 0.0;
};

/// One-sided DFT coefficients f~_0..f~_{N_x} of a real signal of N_s samples
/// over the period T. Wavenumbers are k_j = j * (2 pi / T).
template <Scalar Real>
struct FourierSpectrum {
    std::vector<std::complex<Real>> coeffs;
    double duration = 0.0;
    std::size_t sample_count = 0;

    std::size_t n_freq() const noexcept { return coeffs.empty() ? 0 : coeffs.size() - 1; }
    double wavenumber_step() const noexcept { return 2.0 * std::numbers::pi / duration; }
    double wavenumber(std::size_t j) const noexcept { return static_cast<double>(j) * wavenumber_step(); }
};

/// Coefficients of f(t) = sum_m a_m phi_m(t), phi_m(t) = sqrt(eta) e^{-eta t/2} L_m(eta t).
template <Scalar Real>
struct LaguerreSpectrum {
    std::vector<Real> coeffs;
    double eta = 1.0;
    double duration = 0.0;

    std::size_t size() const noexcept { return coeffs.size(); }
};

/// Throws InvalidArgument unless eta > 0 and every coefficient is finite.
template <Scalar Real>
void validate(const LaguerreSpectrum<Real>& spectrum);

template <Scalar Real>
LaguerreSpectrum<double> widen(const LaguerreSpectrum<Real>& spectrum);

template <Scalar Real>
LaguerreSpectrum<Real> narrow(const LaguerreSpectrum<double>& spectrum);

}  // namespace lagt
