#pragma once

// Divide-and-conquer transform for long intervals. The signal is split into
// p = 2^s overlapping pieces whose crossfades sum to one, every piece is
// transformed on its own short interval, and the local spectra are merged
// pairwise: the right child is shifted by its offset and added to the left.

#include <cstddef>
#include <vector>

#include "lagt/transport_transform.hpp"
#include "lagt/types.hpp"

namespace lagt {

struct Segment {
    std::size_t first = 0;  // first sample index
    std::size_t last = 0;   // one past the last sample index
    double alpha = 0.0;     // left edge
    double beta = 0.0;      // right edge
};

struct SegmentPlan {
    std::size_t p = 1;
    std::vector<Segment> segments;
    double buffer_width = 0.0;      // full width of each crossfade
    std::size_t buffer_samples = 0; // samples per crossfade
    std::size_t local_n = 0;        // highest coefficient index per segment
    double step = 0.0;
};

/// Weight of the right-hand segment at position i of a crossfade of
/// `width` samples: sin^2(pi i / (2 width)). The left-hand weight is one minus it.
double crossfade_weight(std::size_t i, std::size_t width);

/// Segment cores end at round(i N / p); each interior boundary carries a
/// crossfade of buffer_width centred on it. buffer_width < 0 selects 10% of
/// the core length.
template <Scalar Real>
std::pair<SegmentPlan, std::vector<SampledSignal<Real>>> partition(const SampledSignal<Real>& signal, std::size_t p,
                                                                   double buffer_width = -1.0);

/// Sample-wise sum of the local pieces placed at their offsets.
template <Scalar Real>
std::vector<Real> reassemble_samples(const SegmentPlan& plan, const std::vector<SampledSignal<Real>>& pieces,
                                     std::size_t total_samples);

/// Algorithm 3 on every piece, optionally on `threads` workers; results are
/// stored by segment index.
template <Scalar Real>
std::vector<LaguerreSpectrum<Real>> transform_segments(const std::vector<SampledSignal<Real>>& pieces, double eta,
                                                       std::size_t local_n, const TransformOptions& options = {},
                                                       unsigned threads = 1);

/// log2(p) rounds of pad-shift-add, left to right.
template <Scalar Real>
LaguerreSpectrum<Real> assemble(const std::vector<LaguerreSpectrum<Real>>& spectra, const SegmentPlan& plan,
                                const OperatorContext& context = {});

struct SegmentTiming {
    double partition_seconds = 0.0;
    double step1_seconds = 0.0;
    double step2_seconds = 0.0;
    double total_seconds = 0.0;
    std::size_t local_coefficients = 0;  // p * (local_n + 1)
};

struct SegmentOptions {
    std::size_t p = 1;
    double buffer_width = -1.0;
    /// 0 selects (n + 1) / p coefficients per segment.
    std::size_t local_n = 0;
    unsigned threads = 1;
    TransformOptions transform{};
};

template <Scalar Real>
struct Algorithm4Result {
    LaguerreSpectrum<Real> spectrum;
    SegmentPlan plan;
    SegmentTiming timing;
};

/// The end taper is applied once to the whole signal; the pieces are
/// transformed without a further taper.
template <Scalar Real>
Algorithm4Result<Real> algorithm4(const SampledSignal<Real>& signal, double eta, std::size_t n,
                                  const SegmentOptions& options);

}  // namespace lagt
