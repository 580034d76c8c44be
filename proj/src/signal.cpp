#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "lagt/signal_ops.hpp"
#include "lagt/types.hpp"

namespace lagt {

Precision parse_precision(std::string_view text) {
    if (text == "f32" || text == "single") return Precision::f32;
    if (text == "f64" || text == "double") return Precision::f64;
    throw InvalidArgument("unknown precision '" + std::string(text) + "' (expected f32 or f64)");
}

std::string_view to_string(Precision precision) { return precision == Precision::f32 ? "f32" : "f64"; }

template <Scalar Real>
void validate(const LaguerreSpectrum<Real>& spectrum) {
    if (!(spectrum.eta > 0.0) || !std::isfinite(spectrum.eta)) throw InvalidArgument("eta must be positive");
    for (Real c : spectrum.coeffs) {
        if (!std::isfinite(c)) throw InvalidArgument("spectrum contains a non-finite coefficient");
    }
}

template <Scalar Real>
LaguerreSpectrum<double> widen(const LaguerreSpectrum<Real>& spectrum) {
    return {std::vector<double>(spectrum.coeffs.begin(), spectrum.coeffs.end()), spectrum.eta, spectrum.duration};
}

template <Scalar Real>
LaguerreSpectrum<Real> narrow(const LaguerreSpectrum<double>& spectrum) {
    std::vector<Real> c(spectrum.coeffs.size());
    std::transform(spectrum.coeffs.begin(), spectrum.coeffs.end(), c.begin(),
                   [](double v) { return static_cast<Real>(v); });
    return {std::move(c), spectrum.eta, spectrum.duration};
}

template <Scalar Real>
SampledSignal<Real> apply_end_taper(const SampledSignal<Real>& signal, double fraction) {
    if (fraction < 0.0 || fraction >= 1.0) throw InvalidArgument("taper fraction must lie in [0, 1)");
    std::vector<Real> v(signal.values().begin(), signal.values().end());
    const double width = fraction * signal.duration();
    if (width <= 0.0) return {std::move(v), signal.step()};
    const double start = signal.duration() - width;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double t = signal.time(i);
        if (t <= start) continue;
        const double c = std::cos(0.5 * std::numbers::pi * (t - start) / width);
        v[i] = static_cast<Real>(static_cast<double>(v[i]) * c * c);
    }
    return {std::move(v), signal.step()};
}

template <Scalar Real>
SampledSignal<Real> zero_extend(const SampledSignal<Real>& signal, std::size_t factor) {
    if (factor < 1) throw InvalidArgument("extension factor must be at least 1");
    std::vector<Real> v(signal.size() * factor, Real(0));
    std::copy(signal.values().begin(), signal.values().end(), v.begin());
    return {std::move(v), signal.step()};
}

template <Scalar Real>
SampledSignal<Real> append_ramp(const SampledSignal<Real>& signal, double width) {
    if (width < 0.0) throw InvalidArgument("ramp width must be non-negative");
    const auto count = static_cast<std::size_t>(std::llround(width / signal.step()));
    if (count == 0) return signal;
    const double f0 = signal.values()[0];
    std::vector<Real> v(signal.size() + count);
    std::copy(signal.values().begin(), signal.values().end(), v.begin());
    for (std::size_t i = 0; i < count; ++i) {
        const double s = std::sin(0.5 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(count));
        v[signal.size() + i] = static_cast<Real>(f0 * s * s);
    }
    return {std::move(v), signal.step()};
}

template <Scalar Real>
double signal_energy(const SampledSignal<Real>& signal) {
    long double acc = 0;
    for (Real v : signal.values()) acc += static_cast<long double>(v) * static_cast<long double>(v);
    return static_cast<double>(acc * static_cast<long double>(signal.step()));
}

template <Scalar Real>
SampledSignal<double> widen(const SampledSignal<Real>& signal) {
    return {std::vector<double>(signal.values().begin(), signal.values().end()), signal.step()};
}

template <Scalar Real>
SampledSignal<Real> narrow(const SampledSignal<double>& signal) {
    std::vector<Real> v(signal.size());
    std::transform(signal.values().begin(), signal.values().end(), v.begin(),
                   [](double x) { return static_cast<Real>(x); });
    return {std::move(v), signal.step()};
}

#define LAGT_INSTANTIATE(Real)                                                                   \
    template void validate<Real>(const LaguerreSpectrum<Real>&);                                 \
    template LaguerreSpectrum<double> widen<Real>(const LaguerreSpectrum<Real>&);                \
    template LaguerreSpectrum<Real> narrow<Real>(const LaguerreSpectrum<double>&);               \
    template SampledSignal<Real> apply_end_taper<Real>(const SampledSignal<Real>&, double);      \
    template SampledSignal<Real> zero_extend<Real>(const SampledSignal<Real>&, std::size_t);     \
    template SampledSignal<Real> append_ramp<Real>(const SampledSignal<Real>&, double);         \
    template double signal_energy<Real>(const SampledSignal<Real>&);                             \
    template SampledSignal<double> widen<Real>(const SampledSignal<Real>&);                      \
    template SampledSignal<Real> narrow<Real>(const SampledSignal<double>&);

LAGT_INSTANTIATE(float)
LAGT_INSTANTIATE(double)
#undef LAGT_INSTANTIATE

}  // namespace lagt
