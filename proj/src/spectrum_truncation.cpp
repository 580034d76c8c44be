#include "lagt/spectrum_truncation.hpp"

#include <cmath>

#include "lagt/signal_ops.hpp"

namespace lagt {

template <Scalar Real>
TruncationReport select_truncation(std::span<const Real> coeffs, double energy) {
    if (coeffs.empty()) throw EmptySpectrum("cannot truncate an empty spectrum");
    TruncationReport report;
    report.signal_energy = energy;
    report.partial_energy.resize(coeffs.size());

    long double sum = 0.0L;
    long double best = -1.0L;
    for (std::size_t m = 0; m < coeffs.size(); ++m) {
        const long double c = coeffs[m];
        sum += c * c;
        report.partial_energy[m] = static_cast<double>(sum);
        const long double gap = std::fabs(static_cast<long double>(energy) - sum);
        if (best < 0.0L || gap < best) {
            best = gap;
            report.m0 = m;
        }
    }
    return report;
}

template <Scalar Real>
std::pair<LaguerreSpectrum<Real>, TruncationReport> energy_truncate(const LaguerreSpectrum<Real>& spectrum,
                                                                    const SampledSignal<Real>& signal) {
    auto report = select_truncation<Real>(spectrum.coeffs, signal_energy(signal));
    LaguerreSpectrum<Real> out = spectrum;
    out.coeffs.resize(report.m0 + 1);
    return {std::move(out), std::move(report)};
}

#define LAGT_INSTANTIATE(Real)                                                                       \
    template TruncationReport select_truncation<Real>(std::span<const Real>, double);                \
    template std::pair<LaguerreSpectrum<Real>, TruncationReport> energy_truncate<Real>(               \
        const LaguerreSpectrum<Real>&, const SampledSignal<Real>&);

LAGT_INSTANTIATE(float)
LAGT_INSTANTIATE(double)
#undef LAGT_INSTANTIATE

}  // namespace lagt
