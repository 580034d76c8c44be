#include "lagt/fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <vector>

namespace lagt::fixtures {
namespace {

std::size_t sample_count(double step, double duration) {
    if (!(step > 0.0) || !(duration > 0.0)) throw InvalidArgument("fixture step and duration must be positive");
    return static_cast<std::size_t>(std::llround(duration / step));
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

double ricker(double tau, double peak) {
    const double a = std::numbers::pi * peak * tau;
    const double a2 = a * a;
    return (1.0 - 2.0 * a2) * std::exp(-a2);
}

}  // namespace

double source_value(double t, const SourceParams& params) {
    const double a = 2.0 * std::numbers::pi * params.f0 * (t - params.t0);
    return std::exp(-a * a / (params.g * params.g)) * std::sin(a);
}

SampledSignal<double> source_signal(double step, double duration, const SourceParams& params) {
    std::vector<double> v(sample_count(step, duration));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = source_value(static_cast<double>(i) * step, params);
    return {std::move(v), step};
}

double ramped_value(double t) {
    const double s = t / 0.25;
    return std::exp(-s * s) * std::cos(12.0 * std::numbers::pi * t);
}

SampledSignal<double> ramped_signal(double step, double duration) {
    std::vector<double> v(sample_count(step, duration));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = ramped_value(static_cast<double>(i) * step);
    return {std::move(v), step};
}

SampledSignal<double> bursts_signal(const BurstParams& params) {
    std::vector<double> v(sample_count(params.step, params.duration), 0.0);
    std::mt19937_64 rng(params.seed);
    for (std::size_t w = 0; w < params.wavelets; ++w) {
        const double centre = uniform(rng, 0.1 * params.duration, 0.9 * params.duration);
        const double peak = uniform(rng, 8.0, 20.0);
        const double amplitude = uniform(rng, -1.0, 1.0);
        for (std::size_t i = 0; i < v.size(); ++i) {
            v[i] += amplitude * ricker(static_cast<double>(i) * params.step - centre, peak);
        }
    }
    double peak = 0.0;
    for (double x : v) peak = std::max(peak, std::fabs(x));
    const double limit = params.clip * peak;
    for (double& x : v) x = std::clamp(x, -limit, limit);
    return {std::move(v), params.step};
}

SampledSignal<double> by_name(std::string_view name) {
    if (name == "source") return source_signal();
    if (name == "ramped") return ramped_signal();
    if (name == "bursts") return bursts_signal();
    throw InvalidArgument("unknown fixture '" + std::string(name) + "'");
}

}  // namespace lagt::fixtures
