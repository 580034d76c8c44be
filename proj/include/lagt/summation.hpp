#pragma once

// Kahan-compensated accumulator. Keeps long float sums (reconstruction,
// synthesis over wavenumbers) at the level of a single rounding.

#include "lagt/types.hpp"

namespace lagt {

template <Scalar Real>
class CompensatedSum {
public:
    void add(Real x) noexcept {
        const Real y = x - carry_;
        const Real t = sum_ + y;
        carry_ = (t - sum_) - y;
        sum_ = t;
    }
    Real value() const noexcept { return sum_; }

private:
    Real sum_ = 0;
    Real carry_ = 0;
};

}  // namespace lagt
