#pragma once

// Inverse transform. Direct summation v(t) = sum_m a_m phi_m(t) over cached
// basis tables, or the Fourier path: f~ = M^T a followed by an inverse DFT.

#include <cstddef>
#include <map>
#include <memory>
#include <shared_mutex>
#include <span>
#include <tuple>
#include <vector>

#include "lagt/transport_transform.hpp"
#include "lagt/types.hpp"

namespace lagt {

/// phi_m(t_i) = sqrt(eta) l_m(eta t_i), row i holds m = 0..order_count-1.
struct BasisTable {
    double eta = 1.0;
    std::vector<double> grid;
    std::size_t order_count = 0;
    std::vector<double> values;

    std::span<const double> row(std::size_t i) const { return {values.data() + i * order_count, order_count}; }
};

BasisTable build_basis(double eta, std::span<const double> grid, std::size_t order_count,
                       bool allow_shift_doubling = true);

/// Basis tables keyed by (eta, grid, order count); population is synchronized.
class BasisCache {
public:
    std::shared_ptr<const BasisTable> get(double eta, std::span<const double> grid, std::size_t order_count,
                                          bool allow_shift_doubling = true);
    std::size_t size() const;

private:
    using Key = std::tuple<double, std::vector<double>, std::size_t>;
    mutable std::shared_mutex mutex_;
    std::map<Key, std::shared_ptr<const BasisTable>> tables_;
};

struct ReconstructOptions {
    BasisCache* cache = nullptr;
    bool allow_shift_doubling = true;
};

/// t_i = i * step, i < count.
std::vector<double> uniform_grid(double step, std::size_t count);

/// Basis values are generated in double; the sums run in Real.
template <Scalar Real>
std::vector<Real> reconstruct_at(const LaguerreSpectrum<Real>& spectrum, std::span<const double> grid,
                                 const ReconstructOptions& options = {});

template <Scalar Real>
SampledSignal<Real> reconstruct(const LaguerreSpectrum<Real>& spectrum, double step, std::size_t count,
                                const ReconstructOptions& options = {});

/// f~_j = sum_m M_mj a_m with the plain matrix; the result describes
/// sample_count samples over matrix.duration.
template <Scalar Real>
FourierSpectrum<Real> spectrum_to_fourier(const LaguerreSpectrum<Real>& spectrum, const TransformMatrix<Real>& matrix,
                                          std::size_t sample_count);

/// f_i = (1/T) [f~_0 + 2 Re sum_j f~_j e^{ik_j t_i}], the inverse of forward_dft.
template <Scalar Real>
SampledSignal<Real> inverse_dft(const FourierSpectrum<Real>& spectrum);

/// sqrt(sum (f_i - v_i)^2 / sum f_i^2), accumulated in long double.
template <Scalar Real>
double relative_error(std::span<const Real> reference, std::span<const Real> approx);

template <Scalar Real>
double relative_error(const SampledSignal<Real>& reference, const SampledSignal<Real>& approx);

}  // namespace lagt
