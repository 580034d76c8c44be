#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "lagt/types.hpp"

namespace lagt {

struct TruncationReport {
    std::size_t m0 = 0;
    double signal_energy = 0.0;
    /// partial_energy[m] = sum_{k<=m} a_k^2
    std::vector<double> partial_energy;
};

/// Index minimizing |energy - sum_{k<=m} a_k^2|, smaller index on ties.
/// Sums are accumulated in long double.
template <Scalar Real>
TruncationReport select_truncation(std::span<const Real> coeffs, double energy);

/// Keeps a_0..a_m0 where m0 matches the cumulative coefficient energy to the
/// rectangle-rule energy of `signal`.
template <Scalar Real>
std::pair<LaguerreSpectrum<Real>, TruncationReport> energy_truncate(const LaguerreSpectrum<Real>& spectrum,
                                                                    const SampledSignal<Real>& signal);

}  // namespace lagt
