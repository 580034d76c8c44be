#include "lagt/laguerre_eval.hpp"

#include <cmath>
#include <numbers>

#include "lagt/fft.hpp"

namespace lagt {
namespace {

constexpr std::size_t kDirectConvolutionLimit = 64;

}  // namespace

double ShiftSchedule::total_argument() const noexcept { return std::ldexp(eta * base_step, static_cast<int>(doublings)); }

ShiftSchedule plan_shift_schedule(double x, double eta, double guard) {
    if (!(eta > 0.0)) throw InvalidArgument("eta must be positive");
    if (x < 0.0) throw InvalidArgument("Laguerre argument must be non-negative");
    if (!(guard > 0.0)) throw InvalidArgument("argument guard must be positive");
    unsigned p = 0;
    while (std::ldexp(x, -static_cast<int>(p)) > guard) ++p;
    return {std::ldexp(x, -static_cast<int>(p)) / eta, p, eta};
}

template <Scalar Real>
LaguerreFunctionTable<Real> eval_split_recurrence(std::size_t order_max, double x, double guard) {
    if (!(x >= 0.0)) throw InvalidArgument("Laguerre argument must be non-negative");
    if (x > guard) throw GuardExceeded(x, guard);

    LaguerreFunctionTable<Real> table{x, std::vector<Real>(order_max + 1)};
    auto& out = table.values;
    const Real xr = static_cast<Real>(x);
    const Real half = std::exp(-xr / Real(4));

    // Both seeds carry the e^{-x/4} factor so every term of the recurrence does.
    Real prev = half;
    out[0] = prev * half;
    if (order_max == 0) return table;
    Real curr = (Real(1) - xr) * half;
    out[1] = curr * half;
    for (std::size_t m = 1; m < order_max; ++m) {
        const Real mr = static_cast<Real>(m);
        const Real next = ((Real(2) * mr + Real(1) - xr) * curr - mr * prev) / (mr + Real(1));
        prev = curr;
        curr = next;
        out[m + 1] = curr * half;
    }
    return table;
}

template <Scalar Real>
std::vector<Real> shift_with_table(std::span<const Real> a, std::span<const Real> table) {
    const std::size_t n = a.size();
    if (table.size() < n) throw InvalidArgument("shift table shorter than the coefficient sequence");
    std::vector<Real> diff(n);
    Real previous = 0;
    for (std::size_t m = 0; m < n; ++m) {
        diff[m] = a[m] - previous;
        previous = a[m];
    }
    if (n <= kDirectConvolutionLimit) return fft::direct_convolution<Real>(diff, table.first(n), n);
    return fft::linear_convolution<Real>(diff, table.first(n), n);
}

template <Scalar Real>
LaguerreFunctionTable<Real> eval_shift_doubling(std::size_t order_max, const ShiftSchedule& schedule, double guard) {
    if (!(schedule.eta > 0.0)) throw InvalidArgument("eta must be positive");
    if (schedule.base_step < 0.0) throw InvalidArgument("shift step must be non-negative");

    // Shifting is causal in the coefficient index, so a table of the final
    // length is exact for every order it holds; no extra padding is needed.
    auto table = eval_split_recurrence<Real>(order_max, schedule.base_argument(), guard);
    // A zero shift composed with itself is still the identity.
    if (schedule.base_argument() == 0.0) return table;
    for (unsigned i = 0; i < schedule.doublings; ++i) {
        table.values = shift_with_table<Real>(table.values, table.values);
        table.argument *= 2.0;
    }
    return table;
}

template <Scalar Real>
LaguerreFunctionTable<Real> laguerre_functions(std::size_t order_max, double x, bool allow_shift_doubling,
                                               double guard) {
    if (!(x >= 0.0)) throw InvalidArgument("Laguerre argument must be non-negative");
    if (x <= guard) return eval_split_recurrence<Real>(order_max, x, guard);
    if (!allow_shift_doubling) throw GuardExceeded(x, guard);
    // eta only scales the bookkeeping; tables depend on the product eta * tau.
    auto table = eval_shift_doubling<Real>(order_max, plan_shift_schedule(x, 1.0, guard), guard);
    table.argument = x;
    return table;
}

double asymptotic_value(std::size_t n, double x) {
    if (!(x > 0.0)) throw InvalidArgument("asymptotic form needs x > 0");
    const double nx = static_cast<double>(n) * x;
    return std::cos(2.0 * std::sqrt(nx) - 0.25 * std::numbers::pi) / (std::sqrt(std::numbers::pi) * std::pow(nx, 0.25));
}

#define LAGT_INSTANTIATE(Real)                                                                                \
    template LaguerreFunctionTable<Real> eval_split_recurrence<Real>(std::size_t, double, double);            \
    template LaguerreFunctionTable<Real> eval_shift_doubling<Real>(std::size_t, const ShiftSchedule&, double); \
    template LaguerreFunctionTable<Real> laguerre_functions<Real>(std::size_t, double, bool, double);          \
    template std::vector<Real> shift_with_table<Real>(std::span<const Real>, std::span<const Real>);

LAGT_INSTANTIATE(float)
LAGT_INSTANTIATE(double)
#undef LAGT_INSTANTIATE

}  // namespace lagt
