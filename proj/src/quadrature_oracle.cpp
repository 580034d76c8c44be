#include "lagt/quadrature_oracle.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "lagt/laguerre_eval.hpp"

namespace lagt {
namespace {

constexpr double kPointsPerOscillation = 20.0;

template <typename Sample>
RectangleResult rectangle_sum(Sample&& sample, std::size_t count, double step, double eta, std::size_t n) {
    if (!(eta > 0.0)) throw InvalidArgument("transform parameter eta must be positive");
    if (!(step > 0.0)) throw InvalidArgument("quadrature step must be positive");

    std::vector<long double> acc(n + 1, 0.0L);
    for (std::size_t i = 0; i < count; ++i) {
        const double t = static_cast<double>(i) * step;
        const double f = sample(i, t);
        if (f == 0.0) continue;
        const auto l = laguerre_functions<double>(n, eta * t);
        for (std::size_t m = 0; m <= n; ++m) acc[m] += static_cast<long double>(f * l.values[m]);
    }

    RectangleResult result;
    result.spectrum = {std::vector<double>(n + 1), eta, static_cast<double>(count) * step};
    const long double scale = static_cast<long double>(step) * std::sqrt(static_cast<long double>(eta));
    for (std::size_t m = 0; m <= n; ++m) result.spectrum.coeffs[m] = static_cast<double>(acc[m] * scale);

    const double bound = resolving_step(eta, n);
    if (step > bound) {
        std::ostringstream msg;
        msg << "step " << step << " does not resolve order " << n << " at eta " << eta << " (needs <= " << bound
            << ")";
        result.warning = ResolutionWarning{step, bound, msg.str()};
    }
    return result;
}

}  // namespace

double resolving_step(double eta, std::size_t n) {
    return 2.0 * std::numbers::pi / (kPointsPerOscillation * eta * std::sqrt(static_cast<double>(n) + 1.0));
}

RectangleResult rectangle_coefficients(const std::function<double(double)>& f, double duration, double eta,
                                       std::size_t n, double fine_step) {
    if (!(duration > 0.0)) throw InvalidArgument("quadrature interval must be positive");
    if (!(fine_step > 0.0)) throw InvalidArgument("quadrature step must be positive");
    const auto count = static_cast<std::size_t>(std::llround(duration / fine_step));
    return rectangle_sum([&f](std::size_t, double t) { return f(t); }, count, fine_step, eta, n);
}

template <Scalar Real>
RectangleResult rectangle_coefficients(const SampledSignal<Real>& signal, double eta, std::size_t n) {
    const auto values = signal.values();
    return rectangle_sum([values](std::size_t i, double) { return static_cast<double>(values[i]); }, signal.size(),
                         signal.step(), eta, n);
}

template RectangleResult rectangle_coefficients<float>(const SampledSignal<float>&, double, std::size_t);
template RectangleResult rectangle_coefficients<double>(const SampledSignal<double>&, double, std::size_t);

}  // namespace lagt
