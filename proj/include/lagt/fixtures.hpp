#pragma once

// Deterministic test and benchmark signals.

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "lagt/types.hpp"

namespace lagt::fixtures {

/// exp(-a^2 / g^2) sin(a), a = 2 pi f0 (t - t0): a smooth pulse that is
/// negligible at both ends of [0, 1].
struct SourceParams {
    double f0 = 30.0;
    double g = 4.0;
    double t0 = 0.5;
};

double source_value(double t, const SourceParams& params = {});
SampledSignal<double> source_signal(double step = 0.002, double duration = 1.0, const SourceParams& params = {});

/// exp(-(t / 0.25)^2) cos(12 pi t): starts at 1, so it needs a ramp.
double ramped_value(double t);
SampledSignal<double> ramped_signal(double step = 0.002, double duration = 1.0);

/// Ricker wavelets with random centres in [0.1 T, 0.9 T], peak frequencies
/// in [8, 20], and amplitudes in [-1, 1], summed and clipped at
/// clip * max |f|. Uniform variates are (x >> 11) * 2^-53 from mt19937_64,
/// so the signal is the same on every platform.
struct BurstParams {
    std::uint64_t seed = 20240611;
    std::size_t wavelets = 24;
    double duration = 4.0;
    double step = 0.004;
    double clip = 0.6;
};

SampledSignal<double> bursts_signal(const BurstParams& params = {});

/// "source", "ramped" or "bursts" with default parameters; InvalidArgument otherwise.
SampledSignal<double> by_name(std::string_view name);

}  // namespace lagt::fixtures
