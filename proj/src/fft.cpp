#include "lagt/fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>

namespace lagt::fft {
namespace {

enum class Kind { r2c, c2r };

template <Scalar Real>
struct Fftw;

template <>
struct Fftw<double> {
    using Plan = fftw_plan;
    using Complex = fftw_complex;
    static Plan plan(Kind kind, int n) {
        auto* re = static_cast<double*>(fftw_malloc(sizeof(double) * static_cast<std::size_t>(n)));
        auto* cx = static_cast<Complex*>(fftw_malloc(sizeof(Complex) * static_cast<std::size_t>(n / 2 + 1)));
        const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
        Plan p = kind == Kind::r2c ? fftw_plan_dft_r2c_1d(n, re, cx, flags) : fftw_plan_dft_c2r_1d(n, cx, re, flags);
        fftw_free(re);
        fftw_free(cx);
        return p;
    }
    static void r2c(Plan p, double* in, std::complex<double>* out) {
        fftw_execute_dft_r2c(p, in, reinterpret_cast<Complex*>(out));
    }
    static void c2r(Plan p, std::complex<double>* in, double* out) {
        fftw_execute_dft_c2r(p, reinterpret_cast<Complex*>(in), out);
    }
};

template <>
struct Fftw<float> {
    using Plan = fftwf_plan;
    using Complex = fftwf_complex;
    static Plan plan(Kind kind, int n) {
        auto* re = static_cast<float*>(fftwf_malloc(sizeof(float) * static_cast<std::size_t>(n)));
        auto* cx = static_cast<Complex*>(fftwf_malloc(sizeof(Complex) * static_cast<std::size_t>(n / 2 + 1)));
        const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
        Plan p = kind == Kind::r2c ? fftwf_plan_dft_r2c_1d(n, re, cx, flags) : fftwf_plan_dft_c2r_1d(n, cx, re, flags);
        fftwf_free(re);
        fftwf_free(cx);
        return p;
    }
    static void r2c(Plan p, float* in, std::complex<float>* out) {
        fftwf_execute_dft_r2c(p, in, reinterpret_cast<Complex*>(out));
    }
    static void c2r(Plan p, std::complex<float>* in, float* out) {
        fftwf_execute_dft_c2r(p, reinterpret_cast<Complex*>(in), out);
    }
};

// FFTW's planner is not thread-safe; plans live for the process lifetime.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

template <Scalar Real>
typename Fftw<Real>::Plan cached_plan(Kind kind, std::size_t n) {
    static std::map<std::pair<Kind, std::size_t>, typename Fftw<Real>::Plan> plans;
    std::lock_guard lock(planner_mutex());
    auto it = plans.find({kind, n});
    if (it != plans.end()) return it->second;
    auto p = Fftw<Real>::plan(kind, static_cast<int>(n));
    if (p == nullptr) throw Error("FFTW failed to create a plan");
    plans.emplace(std::pair{kind, n}, p);
    return p;
}

}  // namespace

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

template <Scalar Real>
std::vector<std::complex<Real>> real_forward(std::span<const Real> input) {
    const std::size_t n = input.size();
    if (n == 0) return {};
    std::vector<Real> in(input.begin(), input.end());
    std::vector<std::complex<Real>> out(n / 2 + 1);
    Fftw<Real>::r2c(cached_plan<Real>(Kind::r2c, n), in.data(), out.data());
    return out;
}

template <Scalar Real>
std::vector<Real> real_inverse(std::span<const std::complex<Real>> half_spectrum, std::size_t n) {
    if (n == 0) return {};
    std::vector<std::complex<Real>> in(n / 2 + 1);
    std::copy_n(half_spectrum.begin(), std::min(half_spectrum.size(), in.size()), in.begin());
    std::vector<Real> out(n);
    Fftw<Real>::c2r(cached_plan<Real>(Kind::c2r, n), in.data(), out.data());
    return out;
}

template <Scalar Real>
std::vector<Real> linear_convolution(std::span<const Real> a, std::span<const Real> b, std::size_t out_len) {
    std::vector<Real> out(out_len, Real(0));
    // Entries past out_len of either input cannot reach the first out_len outputs.
    a = a.first(std::min(a.size(), out_len));
    b = b.first(std::min(b.size(), out_len));
    if (a.empty() || b.empty()) return out;

    const std::size_t n = next_pow2(a.size() + b.size() - 1);
    std::vector<Real> pa(n, Real(0)), pb(n, Real(0));
    std::copy(a.begin(), a.end(), pa.begin());
    std::copy(b.begin(), b.end(), pb.begin());

    auto fa = real_forward<Real>(pa);
    const auto fb = real_forward<Real>(pb);
    for (std::size_t i = 0; i < fa.size(); ++i) fa[i] *= fb[i];
    const auto full = real_inverse<Real>(fa, n);

    const Real scale = Real(1) / static_cast<Real>(n);
    const std::size_t count = std::min(out_len, a.size() + b.size() - 1);
    for (std::size_t i = 0; i < count; ++i) out[i] = full[i] * scale;
    return out;
}

template <Scalar Real>
std::vector<Real> correlation(std::span<const Real> d, std::span<const Real> table, std::size_t out_len) {
    if (out_len == 0) return {};
    if (d.empty()) return std::vector<Real>(out_len, Real(0));
    const std::size_t needed = d.size() + out_len - 1;
    if (table.size() < needed) throw InvalidArgument("correlation table is too short");

    // c_j = (reverse(d) * table)[len(d) - 1 + j]
    std::vector<Real> reversed(d.rbegin(), d.rend());
    const auto conv = linear_convolution<Real>(reversed, table.first(needed), needed);
    return {conv.begin() + static_cast<std::ptrdiff_t>(d.size() - 1), conv.end()};
}

template <Scalar Real>
std::vector<Real> direct_convolution(std::span<const Real> a, std::span<const Real> b, std::size_t out_len) {
    std::vector<Real> out(out_len, Real(0));
    for (std::size_t m = 0; m < out_len; ++m) {
        Real acc = 0;
        const std::size_t jmax = std::min(m + 1, b.size());
        for (std::size_t j = 0; j < jmax; ++j) {
            if (m - j < a.size()) acc += a[m - j] * b[j];
        }
        out[m] = acc;
    }
    return out;
}

template <Scalar Real>
std::vector<Real> direct_correlation(std::span<const Real> d, std::span<const Real> table, std::size_t out_len) {
    if (table.size() + 1 < d.size() + out_len) throw InvalidArgument("correlation table is too short");
    std::vector<Real> out(out_len, Real(0));
    for (std::size_t j = 0; j < out_len; ++j) {
        Real acc = 0;
        for (std::size_t m = 0; m < d.size(); ++m) acc += d[m] * table[m + j];
        out[j] = acc;
    }
    return out;
}

#define LAGT_INSTANTIATE(Real)                                                                                  \
    template std::vector<std::complex<Real>> real_forward<Real>(std::span<const Real>);                         \
    template std::vector<Real> real_inverse<Real>(std::span<const std::complex<Real>>, std::size_t);            \
    template std::vector<Real> linear_convolution<Real>(std::span<const Real>, std::span<const Real>,           \
                                                        std::size_t);                                           \
    template std::vector<Real> correlation<Real>(std::span<const Real>, std::span<const Real>, std::size_t);    \
    template std::vector<Real> direct_convolution<Real>(std::span<const Real>, std::span<const Real>,           \
                                                        std::size_t);                                           \
    template std::vector<Real> direct_correlation<Real>(std::span<const Real>, std::span<const Real>, std::size_t);

LAGT_INSTANTIATE(float)
LAGT_INSTANTIATE(double)
#undef LAGT_INSTANTIATE

}  // namespace lagt::fft
