#pragma once

#include <cstddef>

#include "lagt/types.hpp"

namespace lagt {

/// Raised-cosine decay over the last `fraction` of the interval so the
/// signal reaches zero at t = T. fraction = 0 leaves the signal unchanged.
template <Scalar Real>
SampledSignal<Real> apply_end_taper(const SampledSignal<Real>& signal, double fraction);

/// Append zeros up to factor * T (factor >= 1).
template <Scalar Real>
SampledSignal<Real> zero_extend(const SampledSignal<Real>& signal, std::size_t factor);

/// Append round(width / step) samples of f(0) sin^2(pi t / (2 width)), a
/// quarter period of cos^2 rising from zero. Periodically continued, the
/// ramp leads into f(0) from below.
template <Scalar Real>
SampledSignal<Real> append_ramp(const SampledSignal<Real>& signal, double width);

/// Rectangle-rule energy h * sum f_i^2, accumulated in long double.
template <Scalar Real>
double signal_energy(const SampledSignal<Real>& signal);

template <Scalar Real>
SampledSignal<double> widen(const SampledSignal<Real>& signal);

template <Scalar Real>
SampledSignal<Real> narrow(const SampledSignal<double>& signal);

}  // namespace lagt
