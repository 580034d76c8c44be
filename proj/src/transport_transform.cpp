#include "lagt/transport_transform.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lagt/fft.hpp"
#include "lagt/signal_ops.hpp"
#include "lagt/summation.hpp"

namespace lagt {
namespace {

void check_eta(double eta) {
    if (!(eta > 0.0) || !std::isfinite(eta)) throw InvalidArgument("transform parameter eta must be positive");
}

bool same_duration(double a, double b) { return std::fabs(a - b) <= 1e-12 * std::max(std::fabs(a), std::fabs(b)); }

// Entry (m, j) of the plain matrix in polar form: the modulus does not depend on m.
std::complex<double> matrix_entry(double eta, double k, std::size_t m) {
    const double modulus = std::sqrt(eta) / std::hypot(k, 0.5 * eta);
    const double numerator_arg = std::atan2(k, -0.5 * eta);
    const double denominator_arg = std::atan2(k, 0.5 * eta);
    const double md = static_cast<double>(m);
    return std::polar(modulus, md * numerator_arg - (md + 1.0) * denominator_arg);
}

}  // namespace

SpectralMultiplier spectral_multiplier(double eta, double k) {
    check_eta(eta);
    const std::complex<double> denominator{0.5 * eta, -k};
    return {std::sqrt(eta) / denominator, std::complex<double>{-0.5 * eta, -k} / denominator};
}

std::vector<double> synthesis_weights(std::size_t n_freq, std::size_t sample_count, double duration) {
    std::vector<double> w(n_freq + 1, 2.0 / duration);
    w[0] = 1.0 / duration;
    if (sample_count % 2 == 0 && 2 * n_freq == sample_count) w[n_freq] = 1.0 / duration;
    return w;
}

template <Scalar Real>
FourierSpectrum<Real> forward_dft(const SampledSignal<Real>& signal, std::size_t n_freq) {
    const std::size_t half = signal.size() / 2;
    if (n_freq == kAllFrequencies) n_freq = half;
    if (n_freq > half) throw InvalidArgument("n_freq exceeds half the number of samples");

    auto bins = fft::real_forward<Real>(signal.values());
    bins.resize(n_freq + 1);
    const Real h = static_cast<Real>(signal.step());
    for (auto& b : bins) b *= h;
    return {std::move(bins), signal.duration(), signal.size()};
}

template <Scalar Real>
LaguerreSpectrum<Real> coefficients_via_transport(const FourierSpectrum<Real>& spectrum, double eta, std::size_t n,
                                                  double eval_offset) {
    check_eta(eta);
    if (!(eval_offset >= 0.0)) throw InvalidArgument("evaluation offset must be non-negative");
    if (eval_offset >= spectrum.duration) throw InvalidArgument("evaluation offset must be shorter than the interval");

    LaguerreSpectrum<Real> out{std::vector<Real>(n + 1, Real(0)), eta, spectrum.duration};
    if (spectrum.coeffs.empty()) return out;
    const auto weights = synthesis_weights(spectrum.n_freq(), spectrum.sample_count, spectrum.duration);
    std::vector<CompensatedSum<Real>> sums(n + 1);

    for (std::size_t j = 0; j < spectrum.coeffs.size(); ++j) {
        const double k = spectrum.wavenumber(j);
        std::complex<double> f = spectrum.coeffs[j];
        if (eval_offset > 0.0) f *= std::polar(1.0, -k * eval_offset);
        const std::complex<Real> fj{static_cast<Real>(f.real()), static_cast<Real>(f.imag())};
        if (fj == std::complex<Real>{}) continue;
        const Real wj = static_cast<Real>(weights[j]);

        const auto [base, ratio] = spectral_multiplier(eta, k);
        std::complex<double> v = base;
        for (std::size_t m = 0; m <= n; ++m) {
            const Real re = static_cast<Real>(v.real());
            const Real im = static_cast<Real>(v.imag());
            sums[m].add(wj * (re * fj.real() - im * fj.imag()));
            v *= ratio;
        }
    }
    for (std::size_t m = 0; m <= n; ++m) out.coeffs[m] = sums[m].value();
    return out;
}

template <Scalar Real>
TransformMatrix<Real> build_transform_matrix(double eta, std::size_t n, std::size_t n_freq, double duration,
                                             bool modified, const TransformOptions& options) {
    check_eta(eta);
    if (!(duration > 0.0)) throw InvalidArgument("matrix duration must be positive");
    const std::size_t rows = n + 1;
    const std::size_t cols = n_freq + 1;
    if (rows > options.matrix_guard / cols) {
        throw ResourceLimit("transform matrix of " + std::to_string(rows) + " x " + std::to_string(cols) +
                            " entries exceeds the size guard");
    }

    TransformMatrix<Real> matrix{std::vector<std::complex<Real>>(rows * cols), rows, cols, eta, duration, modified};
    const double dk = 2.0 * std::numbers::pi / duration;

    if (!modified) {
        for (std::size_t j = 0; j < cols; ++j) {
            const double k = static_cast<double>(j) * dk;
            for (std::size_t m = 0; m < rows; ++m) {
                const auto e = matrix_entry(eta, k, m);
                matrix.entries[m * cols + j] = {static_cast<Real>(e.real()), static_cast<Real>(e.imag())};
            }
        }
        return matrix;
    }

    // Q^2 is real-linear, so it acts on the real and imaginary parts of each
    // column separately; the column is extended and faded like a coefficient
    // sequence in algorithm3.
    LaguerreTableCache local_cache;
    ConjugationOptions q{rows, rows, options.context};
    if (q.context.cache == nullptr) q.context.cache = &local_cache;
    const std::size_t extended = std::max<std::size_t>(options.summation_factor, 1) * rows;

    LaguerreSpectrum<double> re{std::vector<double>(extended), eta, duration};
    LaguerreSpectrum<double> im{std::vector<double>(extended), eta, duration};
    for (std::size_t j = 0; j < cols; ++j) {
        const double k = static_cast<double>(j) * dk;
        for (std::size_t m = 0; m < extended; ++m) {
            const auto e = matrix_entry(eta, k, m);
            re.coeffs[m] = e.real();
            im.coeffs[m] = e.imag();
        }
        const auto qre = truncate_after(re, duration, q);
        const auto qim = truncate_after(im, duration, q);
        for (std::size_t m = 0; m < rows; ++m) {
            matrix.entries[m * cols + j] = {static_cast<Real>(qre.coeffs[m]), static_cast<Real>(qim.coeffs[m])};
        }
    }
    return matrix;
}

template <Scalar Real>
LaguerreSpectrum<Real> apply_matrix(const TransformMatrix<Real>& matrix, const FourierSpectrum<Real>& spectrum) {
    if (spectrum.coeffs.size() != matrix.cols) {
        throw DimensionMismatch("matrix has " + std::to_string(matrix.cols) + " columns, spectrum has " +
                                std::to_string(spectrum.coeffs.size()) + " bins");
    }
    if (!same_duration(spectrum.duration, matrix.duration)) {
        throw DimensionMismatch("matrix and spectrum were built for different intervals");
    }
    const auto weights = synthesis_weights(spectrum.n_freq(), spectrum.sample_count, spectrum.duration);
    std::vector<Real> w(weights.begin(), weights.end());

    LaguerreSpectrum<Real> out{std::vector<Real>(matrix.rows, Real(0)), matrix.eta, matrix.duration};
    for (std::size_t m = 0; m < matrix.rows; ++m) {
        const std::complex<Real>* row = matrix.entries.data() + m * matrix.cols;
        CompensatedSum<Real> acc;
        for (std::size_t j = 0; j < matrix.cols; ++j) {
            const auto& f = spectrum.coeffs[j];
            acc.add(w[j] * (row[j].real() * f.real() + row[j].imag() * f.imag()));
        }
        out.coeffs[m] = acc.value();
    }
    return out;
}

template <Scalar Real>
Algorithm1Result<Real> algorithm1(const SampledSignal<Real>& signal, double eta, std::size_t n,
                                  std::size_t extension_factor, const TransformOptions& options) {
    if (extension_factor < 1) throw InvalidArgument("extension factor must be at least 1");
    if (signal.size() * extension_factor > options.matrix_guard) {
        throw ResourceLimit("extended signal exceeds the size guard");
    }
    const auto extended = zero_extend(apply_end_taper(signal, options.taper_fraction), extension_factor);
    auto full = coefficients_via_transport(forward_dft(extended), eta, n);
    full.duration = signal.duration();
    auto [spectrum, report] = energy_truncate(full, signal);
    return {std::move(spectrum), std::move(full), std::move(report)};
}

template <Scalar Real>
LaguerreSpectrum<Real> algorithm2(const SampledSignal<Real>& signal, const TransformMatrix<Real>& matrix,
                                  const TransformOptions& options) {
    if (!matrix.modified) throw InvalidArgument("algorithm 2 needs the Q^2-modified matrix");
    if (options.ramp_width > 0.0) throw InvalidArgument("algorithm 2 does not support a ramp; use algorithm 3");
    if (!same_duration(signal.duration(), matrix.duration) || matrix.cols - 1 > signal.size() / 2) {
        throw DimensionMismatch("matrix grid does not match the signal grid");
    }
    const auto tapered = apply_end_taper(signal, options.taper_fraction);
    return apply_matrix(matrix, forward_dft(tapered, matrix.cols - 1));
}

template <Scalar Real>
LaguerreSpectrum<Real> algorithm3(const SampledSignal<Real>& signal, double eta, std::size_t n,
                                  const TransformOptions& options) {
    const double duration = signal.duration();
    auto prepared = apply_end_taper(signal, options.taper_fraction);
    double delta = 0.0;
    if (options.ramp_width > 0.0) {
        prepared = append_ramp(prepared, options.ramp_width);
        delta = prepared.duration() - duration;
    }

    const std::size_t rows = n + 1;
    const std::size_t extended = std::max<std::size_t>(options.summation_factor, 1) * rows;
    const auto plain = coefficients_via_transport(forward_dft(prepared), eta, extended - 1, delta);

    const ConjugationOptions q{rows, rows, options.context};
    auto out = delta > 0.0 ? double_conjugate(plain, duration + delta, duration, q) : truncate_after(plain, duration, q);
    out.duration = duration;
    return out;
}

#define LAGT_INSTANTIATE(Real)                                                                                     \
    template FourierSpectrum<Real> forward_dft<Real>(const SampledSignal<Real>&, std::size_t);                    \
    template LaguerreSpectrum<Real> coefficients_via_transport<Real>(const FourierSpectrum<Real>&, double,        \
                                                                     std::size_t, double);                         \
    template TransformMatrix<Real> build_transform_matrix<Real>(double, std::size_t, std::size_t, double, bool,   \
                                                                const TransformOptions&);                          \
    template LaguerreSpectrum<Real> apply_matrix<Real>(const TransformMatrix<Real>&, const FourierSpectrum<Real>&); \
    template Algorithm1Result<Real> algorithm1<Real>(const SampledSignal<Real>&, double, std::size_t, std::size_t, \
                                                     const TransformOptions&);                                     \
    template LaguerreSpectrum<Real> algorithm2<Real>(const SampledSignal<Real>&, const TransformMatrix<Real>&,     \
                                                     const TransformOptions&);                                     \
    template LaguerreSpectrum<Real> algorithm3<Real>(const SampledSignal<Real>&, double, std::size_t,              \
                                                     const TransformOptions&);

LAGT_INSTANTIATE(float)
LAGT_INSTANTIATE(double)
#undef LAGT_INSTANTIATE

}  // namespace lagt
