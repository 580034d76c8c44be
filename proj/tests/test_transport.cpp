#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <thread>

#include "lagt/fixtures.hpp"
#include "lagt/reconstruction.hpp"
#include "lagt/signal_ops.hpp"
#include "lagt/transport_transform.hpp"
#include "oracles.hpp"

using namespace lagt;

namespace {

double max_abs(std::span<const double> v) {
    double m = 0;
    for (double x : v) m = std::max(m, std::fabs(x));
    return m;
}

}  // namespace

TEST_SUITE("transport_transform") {

TEST_CASE("spectral multiplier") {
    const double eta = 7.0;
    const auto zero = spectral_multiplier(eta, 0.0);
    CHECK(zero.ratio.real() == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(zero.ratio.imag() == doctest::Approx(0.0));
    CHECK(zero.base.real() == doctest::Approx(2.0 / std::sqrt(eta)).epsilon(1e-15));

    // (-1 - i) / (1 - i) = -i
    const auto m = spectral_multiplier(2.0, 1.0);
    CHECK(std::abs(m.ratio - std::complex<double>(0.0, -1.0)) <= 1e-15);
    const double expected_arg = std::numbers::pi + 2.0 * std::atan2(1.0, 1.0);
    CHECK(std::abs(m.ratio - std::polar(1.0, expected_arg)) <= 1e-15);
}

TEST_CASE("forward DFT") {
    SUBCASE("zero and constant") {
        const SampledSignal<double> zero(std::vector<double>(64, 0.0), 0.1);
        for (auto c : forward_dft(zero).coeffs) CHECK(std::abs(c) == 0.0);

        const SampledSignal<double> constant(std::vector<double>(64, 2.5), 0.1);
        const auto s = forward_dft(constant);
        CHECK(s.coeffs[0].real() == doctest::Approx(2.5 * 6.4).epsilon(1e-14));
        for (std::size_t j = 1; j < s.coeffs.size(); ++j) CHECK(std::abs(s.coeffs[j]) <= 1e-13);
    }
    SUBCASE("matches the direct long double DFT") {
        const auto f = fixtures::source_signal();
        const auto s = forward_dft(f);
        const std::vector<double> values(f.values().begin(), f.values().end());
        const auto ref = oracle::direct_dft(values, f.step(), f.size() / 2);
        for (std::size_t j = 0; j < ref.size(); ++j) CHECK(std::abs(s.coeffs[j] - ref[j]) <= 1e-14);
    }
    SUBCASE("matches the Fourier integral of the smooth source") {
        const auto f = fixtures::source_signal();
        const auto s = forward_dft(f);
        const double h = 1e-6;
        const auto count = static_cast<std::size_t>(std::llround(1.0 / h));
        double norm = 0;
        for (const auto& c : s.coeffs) norm = std::max(norm, std::abs(c));
        for (std::size_t j : {0, 5, 15, 30, 45}) {
            const double k = 2.0 * std::numbers::pi * static_cast<double>(j);
            long double re = 0, im = 0;
            for (std::size_t i = 0; i < count; ++i) {
                const double t = static_cast<double>(i) * h;
                const double v = fixtures::source_value(t);
                re += v * std::cos(k * t);
                im -= v * std::sin(k * t);
            }
            const std::complex<double> integral(static_cast<double>(re * h), static_cast<double>(im * h));
            CHECK(std::abs(s.coeffs[j] - integral) <= 1e-8 * norm);
        }
    }
    SUBCASE("too many bins") {
        const SampledSignal<double> f(std::vector<double>(16, 1.0), 0.1);
        CHECK_THROWS_AS(forward_dft(f, 9), InvalidArgument);
    }
}

TEST_CASE("synthesis weights") {
    const auto even = synthesis_weights(4, 8, 2.0);
    CHECK(even == std::vector<double>{0.5, 1.0, 1.0, 1.0, 0.5});
    const auto odd = synthesis_weights(3, 7, 2.0);
    CHECK(odd == std::vector<double>{0.5, 1.0, 1.0, 1.0});
}

TEST_CASE("coefficients via transport") {
    SUBCASE("zero spectrum") {
        FourierSpectrum<double> zero{std::vector<std::complex<double>>(33), 1.0, 64};
        const auto a = coefficients_via_transport(zero, 50.0, 40);
        CHECK(a.size() == 41);
        for (double v : a.coeffs) CHECK(v == 0.0);
    }
    SUBCASE("a single decaying exponential is the first basis function") {
        // The periodic signal jumps at t = 0; the sample there holds the
        // mean of the two one-sided limits. Cutting the 1/k spectrum of the
        // jump at the Nyquist bin leaves an error of first order in h.
        const double eta = 200.0;
        auto max_error = [eta](double h) {
            std::vector<double> v(static_cast<std::size_t>(std::llround(1.0 / h)));
            for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::exp(-0.5 * eta * static_cast<double>(i) * h);
            v[0] = 0.5;
            const auto f = apply_end_taper(SampledSignal<double>(std::move(v), h), 0.4);
            const auto a = coefficients_via_transport(forward_dft(f), eta, 20);
            double e = std::fabs(a.coeffs[0] - 1.0 / std::sqrt(eta));
            for (std::size_t m = 1; m < a.size(); ++m) e = std::max(e, std::fabs(a.coeffs[m]));
            return e;
        };
        const double h = 2.5e-5;
        const double coarse = max_error(h);
        const double fine = max_error(h / 4);
        CHECK(coarse <= std::sqrt(eta) * h);
        CHECK(coarse / fine == doctest::Approx(4.0).epsilon(0.05));
    }
    SUBCASE("offset must lie inside the interval") {
        FourierSpectrum<double> s{std::vector<std::complex<double>>(5), 1.0, 8};
        CHECK_THROWS_AS(coefficients_via_transport(s, 10.0, 4, -0.1), InvalidArgument);
        CHECK_THROWS_AS(coefficients_via_transport(s, 10.0, 4, 1.0), InvalidArgument);
    }
}

TEST_CASE("transform matrix") {
    const double eta = 300.0;
    const auto m = build_transform_matrix<double>(eta, 80, 40, 1.0, false);
    REQUIRE(m.rows == 81);
    REQUIRE(m.cols == 41);
    for (std::size_t j = 0; j < m.cols; ++j) {
        const double k = 2.0 * std::numbers::pi * static_cast<double>(j);
        CHECK(std::abs(m(0, j)) == doctest::Approx(std::sqrt(eta) / std::hypot(k, eta / 2.0)).epsilon(1e-14));
    }

    SUBCASE("applying the matrix equals the transport sum") {
        std::mt19937_64 rng(11);
        std::normal_distribution<double> normal;
        for (int trial = 0; trial < 100; ++trial) {
            FourierSpectrum<double> s{std::vector<std::complex<double>>(41), 1.0, 80};
            for (auto& c : s.coeffs) c = {normal(rng), normal(rng)};
            s.coeffs[40].imag(0.0);
            const auto a = apply_matrix(m, s);
            const auto b = coefficients_via_transport(s, eta, 80);
            for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::fabs(a.coeffs[i] - b.coeffs[i]) <= 1e-12);
        }
    }
    SUBCASE("the modified matrix removes the periodic copies") {
        const auto f = fixtures::source_signal();
        const auto mod = build_transform_matrix<double>(1600.0, 920, f.size() / 2, 1.0, true);
        const auto a = algorithm2(f, mod);
        std::vector<double> grid;
        for (std::size_t i = 1; i <= 500; ++i) grid.push_back(1.0 + 0.002 * static_cast<double>(i));
        double norm = 0;
        for (double c : a.coeffs) norm += c * c;
        CHECK(max_abs(reconstruct_at(a, grid)) <= 1e-6 * std::sqrt(norm));

        const auto plain = build_transform_matrix<double>(1600.0, 920, f.size() / 2, 1.0, false);
        const auto periodic = apply_matrix(plain, forward_dft(f));
        CHECK(max_abs(reconstruct_at(periodic, grid)) > 0.1);
    }
    SUBCASE("guards and mismatches") {
        CHECK_THROWS_AS(build_transform_matrix<double>(eta, 100, 100, 1.0, false, TransformOptions{.matrix_guard = 1000}),
                        ResourceLimit);
        FourierSpectrum<double> wrong{std::vector<std::complex<double>>(10), 1.0, 18};
        CHECK_THROWS_AS(apply_matrix(m, wrong), DimensionMismatch);
        const SampledSignal<double> f(std::vector<double>(80, 0.0), 1.0 / 80);
        CHECK_THROWS_AS(algorithm2(f, m), InvalidArgument);
    }
}

TEST_CASE("algorithm 1") {
    const auto f = fixtures::source_signal();
    const auto r = algorithm1(f, 1600.0, 920, 2);
    CHECK(r.full.size() == 921);
    CHECK(r.full.duration == doctest::Approx(1.0));
    const auto v = reconstruct(r.full, f.step(), f.size());
    CHECK(relative_error(f, v) <= 1e-12);
    CHECK(r.spectrum.size() == r.report.m0 + 1);

    SUBCASE("zero signal keeps only the first coefficient") {
        const SampledSignal<double> zero(std::vector<double>(100, 0.0), 0.01);
        CHECK(algorithm1(zero, 100.0, 50, 3).report.m0 == 0);
    }
    SUBCASE("without extension the periodic copies spoil the expansion") {
        const auto once = algorithm1(f, 600.0, 400, 1, TransformOptions{.taper_fraction = 0.0});
        const auto thrice = algorithm1(f, 600.0, 400, 3, TransformOptions{.taper_fraction = 0.0});
        const double e1 = relative_error(f, reconstruct(once.full, f.step(), f.size()));
        const double e3 = relative_error(f, reconstruct(thrice.full, f.step(), f.size()));
        CHECK(e1 >= 10.0 * e3);
    }
}

TEST_CASE("algorithms 2 and 3 agree") {
    const auto f = fixtures::source_signal();
    const auto m = build_transform_matrix<double>(1600.0, 700, f.size() / 2, 1.0, true);
    const auto a2 = algorithm2(f, m);
    const auto a3 = algorithm3(f, 1600.0, 700);
    for (std::size_t i = 0; i < a2.size(); ++i) CHECK(std::fabs(a2.coeffs[i] - a3.coeffs[i]) <= 1e-12);

    const auto f32 = narrow<float>(f);
    const auto m32 = build_transform_matrix<float>(1600.0, 700, f.size() / 2, 1.0, true);
    const auto b2 = algorithm2(f32, m32);
    const auto b3 = algorithm3(f32, 1600.0, 700);
    for (std::size_t i = 0; i < b2.size(); ++i) CHECK(std::fabs(b2.coeffs[i] - b3.coeffs[i]) <= 1e-6);
}

TEST_CASE("a batch of identical traces gives identical spectra") {
    const auto f = narrow<float>(fixtures::source_signal());
    const auto m = build_transform_matrix<float>(800.0, 500, f.size() / 2, 1.0, true);
    std::vector<LaguerreSpectrum<float>> out(64);
    {
        std::vector<std::jthread> workers;
        for (unsigned w = 0; w < 4; ++w) {
            workers.emplace_back([&, w] {
                for (std::size_t i = w; i < out.size(); i += 4) out[i] = algorithm2(f, m);
            });
        }
    }
    for (const auto& s : out) CHECK(s.coeffs == out[0].coeffs);
}

TEST_CASE("ramp for a signal that starts away from zero") {
    const auto f = fixtures::ramped_signal();
    const auto plain = algorithm3(f, 1600.0, 920, TransformOptions{.taper_fraction = 0.05});
    const auto ramped = algorithm3(f, 1600.0, 920, TransformOptions{.taper_fraction = 0.05, .ramp_width = 0.1});
    CHECK(ramped.duration == doctest::Approx(1.0));
    const auto tapered = apply_end_taper(f, 0.05);
    const double e_plain = relative_error(tapered, reconstruct(plain, f.step(), f.size()));
    const double e_ramp = relative_error(tapered, reconstruct(ramped, f.step(), f.size()));
    CHECK(e_plain > 1e-3);
    CHECK(e_ramp < 1e-5);
}

}
