#pragma once

// Laguerre functions l_m(x) = e^{-x/2} L_m(x), m = 0..order_max, for any
// argument x >= 0.
//
// Below the representability guard the split-exponential recurrence is used:
// [e^{-x/4} L_m(x)] is propagated by the three-term recurrence and the second
// factor e^{-x/4} is applied at the end. Above the guard the table is built at
// x / 2^p and doubled p times with the Laguerre shift operator.

#include <cstddef>
#include <span>
#include <vector>

#include "lagt/types.hpp"

namespace lagt {

/// Largest x for which e^{-x/4} stays a normal number: 4|ln(DBL_MIN)| ~ 2832,
/// rounded down to 2600; 4|ln(FLT_MIN)| ~ 349 for single precision.
template <Scalar Real>
constexpr double default_argument_guard() noexcept {
    if constexpr (std::same_as<Real, float>) {
        return 348.0;
    } else {
        return 2600.0;
    }
}

template <Scalar Real>
struct LaguerreFunctionTable {
    double argument = 0.0;  // x = eta * t
    std::vector<Real> values;

    std::size_t order_max() const noexcept { return values.empty() ? 0 : values.size() - 1; }
};

/// Base step tau, doubled `doublings` times: the table reaches eta * tau * 2^p.
struct ShiftSchedule {
    double base_step = 0.0;
    unsigned doublings = 0;
    double eta = 1.0;

    double base_argument() const noexcept { return eta * base_step; }
    double total_argument() const noexcept;
};

/// Smallest number of doublings that brings x / 2^p under the guard.
ShiftSchedule plan_shift_schedule(double x, double eta, double guard);

template <Scalar Real>
LaguerreFunctionTable<Real> eval_split_recurrence(std::size_t order_max, double x,
                                                  double guard = default_argument_guard<Real>());

template <Scalar Real>
LaguerreFunctionTable<Real> eval_shift_doubling(std::size_t order_max, const ShiftSchedule& schedule,
                                                double guard = default_argument_guard<Real>());

/// Dispatches to the split recurrence below the guard and to shift doubling
/// above it. With allow_shift_doubling = false an argument above the guard
/// raises GuardExceeded.
template <Scalar Real>
LaguerreFunctionTable<Real> laguerre_functions(std::size_t order_max, double x, bool allow_shift_doubling = true,
                                               double guard = default_argument_guard<Real>());

/// Leading term of the large-order asymptotic form,
/// cos(2 sqrt(n x) - pi/4) / (sqrt(pi) (n x)^{1/4}). Cross-check only.
double asymptotic_value(std::size_t n, double x);

/// One shift step on a coefficient sequence given the table l_j(eta tau):
/// b_m = sum_{j<=m} (a_{m-j} - a_{m-j-1}) l_j. Output has len(a) entries.
template <Scalar Real>
std::vector<Real> shift_with_table(std::span<const Real> a, std::span<const Real> table);

}  // namespace lagt
