#include "lagt/series_operators.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>

#include "lagt/fft.hpp"
#include "lagt/laguerre_eval.hpp"

namespace lagt {
namespace {

std::shared_ptr<const std::vector<double>> table_for(const OperatorContext& context, double argument,
                                                     std::size_t length) {
    if (context.cache != nullptr) return context.cache->get(argument, length, context.allow_shift_doubling);
    auto t = laguerre_functions<double>(length - 1, argument, context.allow_shift_doubling);
    return std::make_shared<const std::vector<double>>(std::move(t.values));
}

template <Scalar Real>
std::vector<Real> cast_table(const std::vector<double>& table, std::size_t length) {
    std::vector<Real> out(length);
    std::transform(table.begin(), table.begin() + static_cast<std::ptrdiff_t>(length), out.begin(),
                   [](double v) { return static_cast<Real>(v); });
    return out;
}

void check_tau(double tau) {
    if (!(tau >= 0.0) || !std::isfinite(tau)) throw InvalidArgument("operator parameter tau must be non-negative");
}

// Differences of the (optionally windowed) sequence, closed with -a_{N-1} so
// the sum covers the sequence followed by zeros.
template <Scalar Real>
std::vector<Real> closed_differences(std::span<const Real> a, const std::vector<double>& weights) {
    const std::size_t n = a.size();
    std::vector<Real> d(n + 1);
    Real previous = 0;
    for (std::size_t m = 0; m < n; ++m) {
        const Real v = weights.empty() ? a[m] : static_cast<Real>(weights[m]) * a[m];
        d[m] = v - previous;
        previous = v;
    }
    d[n] = -previous;
    return d;
}

template <Scalar Real>
std::vector<Real> conjugate_with_table(std::span<const Real> a, std::span<const Real> table, std::size_t out_len,
                                       const std::vector<double>& weights) {
    const auto d = closed_differences<Real>(a, weights);
    return fft::correlation<Real>(d, table, out_len);
}

}  // namespace

std::shared_ptr<const std::vector<double>> LaguerreTableCache::get(double argument, std::size_t length,
                                                                   bool allow_shift_doubling) {
    const auto key = std::pair{argument, length};
    {
        std::shared_lock lock(mutex_);
        auto it = tables_.find(key);
        if (it != tables_.end()) return it->second;
    }
    auto t = laguerre_functions<double>(length - 1, argument, allow_shift_doubling);
    auto table = std::make_shared<const std::vector<double>>(std::move(t.values));
    std::unique_lock lock(mutex_);
    return tables_.try_emplace(key, std::move(table)).first->second;
}

std::size_t LaguerreTableCache::size() const {
    std::shared_lock lock(mutex_);
    return tables_.size();
}

std::vector<double> summation_window(std::size_t length, std::size_t window_start) {
    std::vector<double> w(length, 1.0);
    if (window_start >= length) return w;
    const double span = static_cast<double>(length - window_start + 1);
    for (std::size_t m = window_start; m < length; ++m) {
        const double c = std::cos(0.5 * std::numbers::pi * static_cast<double>(m - window_start + 1) / span);
        w[m] = c * c;
    }
    return w;
}

template <Scalar Real>
LaguerreSpectrum<Real> shift(const LaguerreSpectrum<Real>& a, const OperatorParams& params,
                             const OperatorContext& context) {
    validate(a);
    check_tau(params.tau);
    const std::size_t out_len = params.output_len == 0 ? a.size() : params.output_len;
    LaguerreSpectrum<Real> result{std::vector<Real>(out_len, Real(0)), a.eta, a.duration + params.tau};
    if (out_len == 0) return result;

    std::vector<Real> padded(out_len, Real(0));
    std::copy_n(a.coeffs.begin(), std::min(out_len, a.size()), padded.begin());
    const auto table = table_for(context, a.eta * params.tau, out_len);
    result.coeffs = shift_with_table<Real>(padded, cast_table<Real>(*table, out_len));
    return result;
}

template <Scalar Real>
LaguerreSpectrum<Real> conjugate(const LaguerreSpectrum<Real>& a, const OperatorParams& params,
                                 const OperatorContext& context) {
    validate(a);
    check_tau(params.tau);
    const std::size_t out_len = params.output_len == 0 ? a.size() : params.output_len;
    LaguerreSpectrum<Real> result{std::vector<Real>(out_len, Real(0)), a.eta, params.tau};
    if (out_len == 0 || a.coeffs.empty()) return result;

    const std::size_t table_len = a.size() + out_len;
    const auto table = table_for(context, a.eta * params.tau, table_len);
    result.coeffs = conjugate_with_table<Real>(a.coeffs, cast_table<Real>(*table, table_len), out_len, {});
    return result;
}

template <Scalar Real>
LaguerreSpectrum<Real> double_conjugate(const LaguerreSpectrum<Real>& a, double first_tau, double second_tau,
                                        const ConjugationOptions& options) {
    validate(a);
    check_tau(first_tau);
    check_tau(second_tau);
    const std::size_t n = a.size();
    const std::size_t out_len = options.output_len == 0 ? n : options.output_len;
    LaguerreSpectrum<Real> result{std::vector<Real>(out_len, Real(0)), a.eta, second_tau};
    if (out_len == 0 || n == 0) return result;

    const auto weights = options.window_start < n ? summation_window(n, options.window_start) : std::vector<double>{};
    const std::size_t first_len = 2 * n;
    const std::size_t second_len = n + out_len;
    const auto& ctx = options.context;

    const auto first_table = table_for(ctx, a.eta * first_tau, std::max(first_len, second_len));
    const auto mirrored =
        conjugate_with_table<Real>(a.coeffs, cast_table<Real>(*first_table, first_len), n, weights);

    const auto second_table =
        first_tau == second_tau ? first_table : table_for(ctx, a.eta * second_tau, second_len);
    result.coeffs = conjugate_with_table<Real>(mirrored, cast_table<Real>(*second_table, second_len), out_len, {});
    return result;
}

template <Scalar Real>
LaguerreSpectrum<Real> truncate_after(const LaguerreSpectrum<Real>& a, double tau, const ConjugationOptions& options) {
    return double_conjugate(a, tau, tau, options);
}

template <Scalar Real>
LaguerreSpectrum<Real> zero_pad(const LaguerreSpectrum<Real>& a, std::size_t new_len) {
    if (new_len < a.size()) throw InvalidArgument("zero_pad cannot shorten a spectrum");
    LaguerreSpectrum<Real> out = a;
    out.coeffs.resize(new_len, Real(0));
    return out;
}

std::vector<double> shift_direct(std::span<const double> a, std::span<const double> table) {
    std::vector<double> diff(a.size());
    double previous = 0.0;
    for (std::size_t m = 0; m < a.size(); ++m) {
        diff[m] = a[m] - previous;
        previous = a[m];
    }
    return fft::direct_convolution<double>(diff, table, a.size());
}

std::vector<double> conjugate_direct(std::span<const double> a, std::span<const double> table,
                                     std::size_t output_len) {
    const auto d = closed_differences<double>(a, {});
    return fft::direct_correlation<double>(d, table, output_len);
}

#define LAGT_INSTANTIATE(Real)                                                                                     \
    template LaguerreSpectrum<Real> shift<Real>(const LaguerreSpectrum<Real>&, const OperatorParams&,              \
                                                const OperatorContext&);                                           \
    template LaguerreSpectrum<Real> conjugate<Real>(const LaguerreSpectrum<Real>&, const OperatorParams&,          \
                                                    const OperatorContext&);                                       \
    template LaguerreSpectrum<Real> truncate_after<Real>(const LaguerreSpectrum<Real>&, double,                    \
                                                         const ConjugationOptions&);                               \
    template LaguerreSpectrum<Real> double_conjugate<Real>(const LaguerreSpectrum<Real>&, double, double,          \
                                                           const ConjugationOptions&);                             \
    template LaguerreSpectrum<Real> zero_pad<Real>(const LaguerreSpectrum<Real>&, std::size_t);

LAGT_INSTANTIATE(float)
LAGT_INSTANTIATE(double)
#undef LAGT_INSTANTIATE

}  // namespace lagt
