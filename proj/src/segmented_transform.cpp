#include "lagt/segmented_transform.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <thread>

#include "lagt/series_operators.hpp"
#include "lagt/signal_ops.hpp"

namespace lagt {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

bool is_power_of_two(std::size_t p) { return p != 0 && (p & (p - 1)) == 0; }

}  // namespace

double crossfade_weight(std::size_t i, std::size_t width) {
    const double s = std::sin(0.5 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(width));
    return s * s;
}

template <Scalar Real>
std::pair<SegmentPlan, std::vector<SampledSignal<Real>>> partition(const SampledSignal<Real>& signal, std::size_t p,
                                                                   double buffer_width) {
    if (!is_power_of_two(p)) throw InvalidArgument("segment count must be a power of two");
    const std::size_t total = signal.size();
    const double h = signal.step();

    std::vector<std::size_t> cores(p + 1);
    for (std::size_t i = 0; i <= p; ++i) {
        cores[i] = static_cast<std::size_t>(std::llround(static_cast<double>(i) * static_cast<double>(total) /
                                                         static_cast<double>(p)));
    }
    std::size_t shortest = total;
    for (std::size_t i = 0; i < p; ++i) shortest = std::min(shortest, cores[i + 1] - cores[i]);

    if (buffer_width < 0.0) buffer_width = 0.1 * static_cast<double>(shortest) * h;
    const auto width = p == 1 ? std::size_t{0} : static_cast<std::size_t>(std::llround(buffer_width / h));
    if (p > 1 && 2 * width >= shortest) throw InvalidArgument("buffer width must be below half the segment length");

    SegmentPlan plan;
    plan.p = p;
    plan.buffer_width = static_cast<double>(width) * h;
    plan.buffer_samples = width;
    plan.step = h;

    // Crossfade around boundary i covers [fade_start(i), fade_start(i) + width].
    auto fade_start = [&](std::size_t i) { return cores[i] - width / 2; };

    std::vector<SampledSignal<Real>> pieces;
    pieces.reserve(p);
    const auto f = signal.values();
    for (std::size_t i = 0; i < p; ++i) {
        Segment seg;
        seg.first = i == 0 ? 0 : fade_start(i);
        // A left piece keeps the sample where its fade reaches zero, so every
        // local signal ends on an exact zero.
        seg.last = i + 1 == p ? total : fade_start(i + 1) + width + 1;
        seg.alpha = static_cast<double>(seg.first) * h;
        seg.beta = static_cast<double>(seg.last) * h;

        std::vector<Real> local(f.begin() + static_cast<std::ptrdiff_t>(seg.first),
                                f.begin() + static_cast<std::ptrdiff_t>(seg.last));
        if (width > 0) {
            if (i > 0) {
                for (std::size_t k = 0; k < width; ++k) local[k] *= static_cast<Real>(crossfade_weight(k, width));
            }
            if (i + 1 < p) {
                const std::size_t offset = fade_start(i + 1) - seg.first;
                for (std::size_t k = 0; k <= width; ++k) {
                    const Real right = static_cast<Real>(crossfade_weight(k, width));
                    local[offset + k] *= Real(1) - right;
                }
            }
        }
        plan.segments.push_back(seg);
        pieces.emplace_back(std::move(local), h);
    }
    return {std::move(plan), std::move(pieces)};
}

template <Scalar Real>
std::vector<Real> reassemble_samples(const SegmentPlan& plan, const std::vector<SampledSignal<Real>>& pieces,
                                     std::size_t total_samples) {
    if (pieces.size() != plan.segments.size()) throw DimensionMismatch("piece count does not match the plan");
    std::vector<Real> out(total_samples, Real(0));
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        const auto v = pieces[i].values();
        const std::size_t first = plan.segments[i].first;
        for (std::size_t k = 0; k < v.size() && first + k < total_samples; ++k) out[first + k] += v[k];
    }
    return out;
}

template <Scalar Real>
std::vector<LaguerreSpectrum<Real>> transform_segments(const std::vector<SampledSignal<Real>>& pieces, double eta,
                                                       std::size_t local_n, const TransformOptions& options,
                                                       unsigned threads) {
    std::vector<LaguerreSpectrum<Real>> spectra(pieces.size());
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(pieces.size())));
    if (threads == 1) {
        for (std::size_t i = 0; i < pieces.size(); ++i) spectra[i] = algorithm3(pieces[i], eta, local_n, options);
        return spectra;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> workers;
        for (unsigned w = 0; w < threads; ++w) {
            workers.emplace_back([&] {
                for (std::size_t i = next++; i < pieces.size(); i = next++) {
                    try {
                        spectra[i] = algorithm3(pieces[i], eta, local_n, options);
                    } catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (!failure) failure = std::current_exception();
                    }
                }
            });
        }
    }
    if (failure) std::rethrow_exception(failure);
    return spectra;
}

template <Scalar Real>
LaguerreSpectrum<Real> assemble(const std::vector<LaguerreSpectrum<Real>>& spectra, const SegmentPlan& plan,
                                const OperatorContext& context) {
    if (spectra.size() != plan.p || plan.segments.size() != plan.p) {
        throw DimensionMismatch("expected one spectrum per segment");
    }
    struct Node {
        LaguerreSpectrum<Real> spectrum;
        double alpha;
    };
    std::vector<Node> level;
    level.reserve(spectra.size());
    for (std::size_t i = 0; i < spectra.size(); ++i) level.push_back({spectra[i], plan.segments[i].alpha});

    while (level.size() > 1) {
        std::vector<Node> merged;
        merged.reserve(level.size() / 2);
        for (std::size_t i = 0; i + 1 < level.size(); i += 2) {
            const auto& left = level[i];
            const auto& right = level[i + 1];
            if (left.spectrum.size() != right.spectrum.size()) {
                throw DimensionMismatch("spectra merged in one round must have equal lengths");
            }
            const std::size_t doubled = 2 * left.spectrum.size();
            auto sum = zero_pad(left.spectrum, doubled);
            const auto moved = shift(right.spectrum, OperatorParams{right.alpha - left.alpha, doubled}, context);
            for (std::size_t m = 0; m < doubled; ++m) sum.coeffs[m] += moved.coeffs[m];
            sum.duration = std::max(left.spectrum.duration, right.alpha - left.alpha + right.spectrum.duration);
            merged.push_back({std::move(sum), left.alpha});
        }
        level = std::move(merged);
    }
    return std::move(level.front().spectrum);
}

template <Scalar Real>
Algorithm4Result<Real> algorithm4(const SampledSignal<Real>& signal, double eta, std::size_t n,
                                  const SegmentOptions& options) {
    const auto start = Clock::now();
    const std::size_t p = options.p;
    if (!is_power_of_two(p)) throw InvalidArgument("segment count must be a power of two");
    const std::size_t local_n = options.local_n > 0 ? options.local_n : std::max<std::size_t>((n + 1) / p, 1) - 1;

    auto [plan, pieces] = partition(apply_end_taper(signal, options.transform.taper_fraction), p, options.buffer_width);
    plan.local_n = local_n;

    LaguerreTableCache local_cache;
    TransformOptions local = options.transform;
    local.taper_fraction = 0.0;
    if (local.context.cache == nullptr) local.context.cache = &local_cache;
    const double prepared = seconds_since(start);

    const auto step1_start = Clock::now();
    const auto spectra = transform_segments(pieces, eta, local_n, local, options.threads);
    const double step1 = seconds_since(step1_start);

    const auto step2_start = Clock::now();
    auto spectrum = assemble(spectra, plan, local.context);
    const double step2 = seconds_since(step2_start);

    SegmentTiming timing{prepared, step1, step2, seconds_since(start), p * (local_n + 1)};
    return {std::move(spectrum), std::move(plan), timing};
}

#define LAGT_INSTANTIATE(Real)                                                                                     \
    template std::pair<SegmentPlan, std::vector<SampledSignal<Real>>> partition<Real>(const SampledSignal<Real>&,  \
                                                                                      std::size_t, double);        \
    template std::vector<Real> reassemble_samples<Real>(const SegmentPlan&, const std::vector<SampledSignal<Real>>&, \
                                                        std::size_t);                                              \
    template std::vector<LaguerreSpectrum<Real>> transform_segments<Real>(const std::vector<SampledSignal<Real>>&, \
                                                                          double, std::size_t,                     \
                                                                          const TransformOptions&, unsigned);      \
    template LaguerreSpectrum<Real> assemble<Real>(const std::vector<LaguerreSpectrum<Real>>&, const SegmentPlan&, \
                                                   const OperatorContext&);                                        \
    template Algorithm4Result<Real> algorithm4<Real>(const SampledSignal<Real>&, double, std::size_t,              \
                                                     const SegmentOptions&);

LAGT_INSTANTIATE(float)
LAGT_INSTANTIATE(double)
#undef LAGT_INSTANTIATE

}  // namespace lagt
