#pragma once

// Reference coefficients by the rectangle rule on a fine grid,
// a_m = h sum_i f(t_i) phi_m(t_i), t_i = i h in [0, T).

#include <cstddef>
#include <functional>
#include <optional>
#include <string>

#include "lagt/types.hpp"

namespace lagt {

/// Raised (not thrown) when the step does not resolve the fastest
/// oscillation of phi_n with at least 20 points.
struct ResolutionWarning {
    double fine_step = 0.0;
    double resolving_step = 0.0;
    std::string message;
};

struct RectangleResult {
    LaguerreSpectrum<double> spectrum;
    std::optional<ResolutionWarning> warning;
};

/// Largest step giving 20 points per period 2 pi / (eta sqrt(n + 1)).
double resolving_step(double eta, std::size_t n);

RectangleResult rectangle_coefficients(const std::function<double(double)>& f, double duration, double eta,
                                       std::size_t n, double fine_step);

template <Scalar Real>
RectangleResult rectangle_coefficients(const SampledSignal<Real>& signal, double eta, std::size_t n);

}  // namespace lagt
