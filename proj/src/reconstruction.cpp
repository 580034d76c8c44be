#include "lagt/reconstruction.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

#include "lagt/fft.hpp"
#include "lagt/laguerre_eval.hpp"
#include "lagt/summation.hpp"

namespace lagt {

BasisTable build_basis(double eta, std::span<const double> grid, std::size_t order_count, bool allow_shift_doubling) {
    if (!(eta > 0.0)) throw InvalidArgument("transform parameter eta must be positive");
    BasisTable table{eta, {grid.begin(), grid.end()}, order_count, std::vector<double>(grid.size() * order_count)};
    if (order_count == 0) return table;
    const double scale = std::sqrt(eta);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!(grid[i] >= 0.0)) throw InvalidArgument("reconstruction grid must be non-negative");
        const auto l = laguerre_functions<double>(order_count - 1, eta * grid[i], allow_shift_doubling);
        std::transform(l.values.begin(), l.values.end(), table.values.begin() + static_cast<std::ptrdiff_t>(i * order_count),
                       [scale](double v) { return scale * v; });
    }
    return table;
}

std::shared_ptr<const BasisTable> BasisCache::get(double eta, std::span<const double> grid, std::size_t order_count,
                                                  bool allow_shift_doubling) {
    Key key{eta, std::vector<double>(grid.begin(), grid.end()), order_count};
    {
        std::shared_lock lock(mutex_);
        auto it = tables_.find(key);
        if (it != tables_.end()) return it->second;
    }
    auto table = std::make_shared<const BasisTable>(build_basis(eta, grid, order_count, allow_shift_doubling));
    std::unique_lock lock(mutex_);
    return tables_.try_emplace(std::move(key), std::move(table)).first->second;
}

std::size_t BasisCache::size() const {
    std::shared_lock lock(mutex_);
    return tables_.size();
}

std::vector<double> uniform_grid(double step, std::size_t count) {
    std::vector<double> grid(count);
    for (std::size_t i = 0; i < count; ++i) grid[i] = static_cast<double>(i) * step;
    return grid;
}

template <Scalar Real>
std::vector<Real> reconstruct_at(const LaguerreSpectrum<Real>& spectrum, std::span<const double> grid,
                                 const ReconstructOptions& options) {
    validate(spectrum);
    const std::size_t orders = spectrum.size();
    std::shared_ptr<const BasisTable> basis;
    if (options.cache != nullptr) {
        basis = options.cache->get(spectrum.eta, grid, orders, options.allow_shift_doubling);
    } else {
        basis = std::make_shared<const BasisTable>(build_basis(spectrum.eta, grid, orders, options.allow_shift_doubling));
    }

    std::vector<Real> out(grid.size(), Real(0));
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const auto row = basis->row(i);
        CompensatedSum<Real> acc;
        for (std::size_t m = 0; m < orders; ++m) acc.add(spectrum.coeffs[m] * static_cast<Real>(row[m]));
        out[i] = acc.value();
    }
    return out;
}

template <Scalar Real>
SampledSignal<Real> reconstruct(const LaguerreSpectrum<Real>& spectrum, double step, std::size_t count,
                                const ReconstructOptions& options) {
    const auto grid = uniform_grid(step, count);
    return {reconstruct_at(spectrum, grid, options), step};
}

template <Scalar Real>
FourierSpectrum<Real> spectrum_to_fourier(const LaguerreSpectrum<Real>& spectrum, const TransformMatrix<Real>& matrix,
                                          std::size_t sample_count) {
    validate(spectrum);
    if (matrix.modified) throw InvalidArgument("the Fourier path needs the plain transform matrix");
    if (spectrum.size() > matrix.rows) throw DimensionMismatch("spectrum is longer than the matrix has rows");
    if (matrix.cols == 0 || matrix.cols - 1 > sample_count / 2) {
        throw DimensionMismatch("matrix has more frequency bins than the target grid supports");
    }
    if (std::fabs(spectrum.eta - matrix.eta) > 1e-12 * matrix.eta) {
        throw DimensionMismatch("spectrum and matrix use different eta");
    }

    FourierSpectrum<Real> out{std::vector<std::complex<Real>>(matrix.cols), matrix.duration, sample_count};
    for (std::size_t m = 0; m < spectrum.size(); ++m) {
        const Real a = spectrum.coeffs[m];
        const std::complex<Real>* row = matrix.entries.data() + m * matrix.cols;
        for (std::size_t j = 0; j < matrix.cols; ++j) out.coeffs[j] += row[j] * a;
    }
    return out;
}

template <Scalar Real>
SampledSignal<Real> inverse_dft(const FourierSpectrum<Real>& spectrum) {
    const std::size_t n = spectrum.sample_count;
    if (n < 2) throw InvalidArgument("inverse DFT needs at least two samples");
    if (spectrum.n_freq() > n / 2) throw DimensionMismatch("spectrum has more bins than the grid supports");
    auto values = fft::real_inverse<Real>(spectrum.coeffs, n);
    const Real scale = static_cast<Real>(1.0 / spectrum.duration);
    for (auto& v : values) v *= scale;
    return {std::move(values), spectrum.duration / static_cast<double>(n)};
}

template <Scalar Real>
double relative_error(std::span<const Real> reference, std::span<const Real> approx) {
    if (reference.size() != approx.size()) throw DimensionMismatch("relative error needs equal grids");
    long double num = 0.0L, den = 0.0L;
    for (std::size_t i = 0; i < reference.size(); ++i) {
        const long double f = reference[i];
        const long double d = f - static_cast<long double>(approx[i]);
        num += d * d;
        den += f * f;
    }
    if (den == 0.0L) throw DivisionByZero("reference signal is identically zero");
    return static_cast<double>(std::sqrt(num / den));
}

template <Scalar Real>
double relative_error(const SampledSignal<Real>& reference, const SampledSignal<Real>& approx) {
    return relative_error<Real>(reference.values(), approx.values());
}

#define LAGT_INSTANTIATE(Real)                                                                                    \
    template std::vector<Real> reconstruct_at<Real>(const LaguerreSpectrum<Real>&, std::span<const double>,      \
                                                    const ReconstructOptions&);                                   \
    template SampledSignal<Real> reconstruct<Real>(const LaguerreSpectrum<Real>&, double, std::size_t,           \
                                                   const ReconstructOptions&);                                    \
    template FourierSpectrum<Real> spectrum_to_fourier<Real>(const LaguerreSpectrum<Real>&,                      \
                                                             const TransformMatrix<Real>&, std::size_t);          \
    template SampledSignal<Real> inverse_dft<Real>(const FourierSpectrum<Real>&);                                 \
    template double relative_error<Real>(std::span<const Real>, std::span<const Real>);                          \
    template double relative_error<Real>(const SampledSignal<Real>&, const SampledSignal<Real>&);

LAGT_INSTANTIATE(float)
LAGT_INSTANTIATE(double)
#undef LAGT_INSTANTIATE

}  // namespace lagt
