// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 CGPR Project Contributors

#include <catch2/catch_amalgamated.hpp>

#include "cgpr/baselines.hpp"
#include "cgpr/fft.hpp"
#include "cgpr/random.hpp"
#include "cgpr/signals.hpp"
#include "cgpr/simulate.hpp"

using cgpr::cdouble;
using cgpr::ComplexSeries;
using cgpr::SampledSignal;
using cgpr::TimeGrid;

namespace {

// band-limited zero-mean fixture: random harmonics well below Nyquist
SampledSignal smooth_fixture(std::size_t n, std::uint64_t seed) {
    cgpr::Rng rng(seed);
    const TimeGrid grid = TimeGrid::regular(0.0, 1.0 / static_cast<double>(n), n);
    std::vector<double> v(n, 0.0);
    for (int h = 1; h <= 20; ++h) {
        const double a = rng.normal(), b = rng.normal();
        for (std::size_t j = 0; j < n; ++j) {
            const double arg = cgpr::two_pi * h * grid[j];
            v[j] += a * std::cos(arg) + b * std::sin(arg);
        }
    }
    return SampledSignal(grid, v);
}

} // namespace

TEST_CASE("analytic representation of a cosine is the complex exponential", "[baselines]") {
    const double f0 = 3.0;
    const std::size_t n = 512;
    const TimeGrid grid = TimeGrid::regular(0.0, 1.0 / static_cast<double>(n), n); // 3 periods
    std::vector<double> v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = std::cos(cgpr::two_pi * f0 * grid[j]);
    const ComplexSeries z = cgpr::analytic_representation(SampledSignal(grid, v));
    double max_err = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        max_err = std::max(max_err, std::abs(z.values[j] - std::polar(1.0, cgpr::two_pi * f0 * grid[j])));
    }
    CHECK(max_err < 1e-9);
}

TEST_CASE("analytic representation leaves a constant untouched", "[baselines]") {
    const TimeGrid grid = TimeGrid::regular(0.0, 0.01, 64);
    const ComplexSeries z = cgpr::analytic_representation(SampledSignal(grid, std::vector<double>(64, 1.0)));
    for (const cdouble& v : z.values) {
        CHECK(v.real() == Catch::Approx(1.0).margin(1e-12));
        CHECK(std::abs(v.imag()) < 1e-12);
    }
}

TEST_CASE("analytic representation preserves the real part", "[baselines]") {
    cgpr::Rng rng(17);
    const TimeGrid grid = TimeGrid::regular(0.0, 0.01, 157);
    std::vector<double> v(157);
    for (double& x : v) x = rng.normal();
    const SampledSignal s(grid, v);
    const ComplexSeries z = cgpr::analytic_representation(s);
    for (std::size_t j = 0; j < v.size(); ++j) {
        CHECK(std::abs(z.values[j].real() - v[j]) < 1e-10);
    }
}

TEST_CASE("analytic output has no energy at negative frequencies", "[baselines]") {
    const SampledSignal s = smooth_fixture(256, 23);
    const ComplexSeries z = cgpr::analytic_representation(s);
    const auto spec = cgpr::fft::forward(z.values);
    double neg_max = 0.0, pos_max = 0.0;
    for (std::size_t k = 0; k < spec.size(); ++k) {
        const double idx = cgpr::fft::signed_bin_index(k, spec.size());
        if (idx < 0.0) neg_max = std::max(neg_max, std::abs(spec[k]));
        if (idx > 0.0) pos_max = std::max(pos_max, std::abs(spec[k]));
    }
    CHECK(neg_max < 1e-10 * pos_max);
}

TEST_CASE("analytic output carries twice the energy of a zero-mean signal", "[baselines]") {
    const SampledSignal s = smooth_fixture(256, 31);
    const ComplexSeries z = cgpr::analytic_representation(s);
    double es = 0.0, ez = 0.0;
    for (std::size_t j = 0; j < s.size(); ++j) {
        es += s.values[j] * s.values[j];
        ez += std::norm(z.values[j]);
    }
    CHECK(ez == Catch::Approx(2.0 * es).epsilon(1e-8));
}

TEST_CASE("analytic representation rejects non-uniform grids", "[baselines]") {
    const TimeGrid grid(std::vector<double>{0.0, 0.1, 0.3, 0.4});
    const SampledSignal s(grid, std::vector<double>{1.0, 2.0, 3.0, 4.0});
    CHECK_THROWS_AS(cgpr::analytic_representation(s), std::invalid_argument);
}

TEST_CASE("demo signal: counterclockwise part is not the analytic representation", "[baselines]") {
    const std::size_t n = 512;
    const TimeGrid grid = TimeGrid::regular(-1.0, 2.0 / static_cast<double>(n), n);
    const SampledSignal s = cgpr::gen_demo_signal(0.15, 3.0, grid);

    // counterclockwise part A(t) exp(+i 2 pi f0 t) keeps energy at negative
    // frequencies because the envelope spectrum has unbounded support
    std::vector<cdouble> ccw(n);
    for (std::size_t j = 0; j < n; ++j) {
        ccw[j] = std::exp(-std::abs(grid[j]) / 0.15) * std::polar(1.0, cgpr::two_pi * 3.0 * grid[j]);
    }
    const auto ccw_spec = cgpr::fft::forward(ccw);
    const auto out_spec = cgpr::fft::forward(cgpr::analytic_representation(s).values);
    double ccw_neg = 0.0, out_neg = 0.0, out_pos = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double idx = cgpr::fft::signed_bin_index(k, n);
        if (idx < 0.0) {
            ccw_neg = std::max(ccw_neg, std::abs(ccw_spec[k]));
            out_neg = std::max(out_neg, std::abs(out_spec[k]));
        } else if (idx > 0.0) {
            out_pos = std::max(out_pos, std::abs(out_spec[k]));
        }
    }
    CHECK(ccw_neg > 1e-3);            // the counterclockwise part leaks
    CHECK(out_neg < 1e-12 * out_pos); // the quadrature filter does not
}

TEST_CASE("demo signal amplitude from the analytic representation is multimodal", "[baselines]") {
    const std::size_t n = 1024;
    const TimeGrid grid = TimeGrid::regular(-1.0, 2.0 / static_cast<double>(n), n);
    const SampledSignal s = cgpr::gen_demo_signal(0.15, 3.0, grid);
    const cgpr::InstAttrs attrs = cgpr::extract_attrs(cgpr::analytic_representation(s));
    int maxima = 0;
    for (std::size_t j = 1; j + 1 < n; ++j) {
        if (attrs.amplitude[j] > attrs.amplitude[j - 1] &&
            attrs.amplitude[j] > attrs.amplitude[j + 1]) {
            ++maxima;
        }
    }
    CHECK(maxima > 1);
}

TEST_CASE("hilbert identities", "[baselines]") {
    const std::size_t n = 512;
    const TimeGrid grid = TimeGrid::regular(0.0, 1.0 / static_cast<double>(n), n);
    std::vector<double> c(n), expected(n);
    for (std::size_t j = 0; j < n; ++j) {
        c[j] = std::cos(cgpr::two_pi * 3.0 * grid[j]);
        expected[j] = std::sin(cgpr::two_pi * 3.0 * grid[j]);
    }
    const SampledSignal hc = cgpr::hilbert(SampledSignal(grid, c));
    for (std::size_t j = 0; j < n; ++j) CHECK(std::abs(hc.values[j] - expected[j]) < 1e-9);

    const SampledSignal hconst =
        cgpr::hilbert(SampledSignal(grid, std::vector<double>(n, 2.5)));
    for (double v : hconst.values) CHECK(v == 0.0);

    const SampledSignal s = smooth_fixture(256, 41);
    const SampledSignal hh = cgpr::hilbert(cgpr::hilbert(s));
    for (std::size_t j = 0; j < s.size(); ++j) {
        CHECK(std::abs(hh.values[j] + s.values[j]) < 1e-9);
    }
}

TEST_CASE("morlet transform of the center cosine has flat interior magnitude", "[baselines]") {
    const double omega0 = cgpr::two_pi * 2.0, mu = 0.2;
    const TimeGrid grid = TimeGrid::regular(0.0, 0.01, 400);
    std::vector<double> v(grid.size());
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = std::cos(omega0 * grid[j]);
    const ComplexSeries out =
        cgpr::morlet_transform(SampledSignal(grid, v), cgpr::WaveletParams{omega0, mu});
    // Gaussian-integral oracle for the interior magnitude (the counter-rotating
    // term is suppressed by exp(-2 mu^2 omega0^2))
    const double expected = 0.5 * std::sqrt(cgpr::two_pi) * mu;
    double lo = INFINITY, hi = 0.0;
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (grid[j] < 1.0 || grid[j] > 3.0) continue;
        lo = std::min(lo, std::abs(out.values[j]));
        hi = std::max(hi, std::abs(out.values[j]));
    }
    CHECK(hi / lo - 1.0 < 0.01);
    CHECK(hi == Catch::Approx(expected).epsilon(0.01));
}

TEST_CASE("morlet transform of zero is zero", "[baselines]") {
    const TimeGrid grid = TimeGrid::regular(0.0, 0.01, 100);
    const ComplexSeries out = cgpr::morlet_transform(SampledSignal(grid, std::vector<double>(100, 0.0)),
                                                     cgpr::WaveletParams{cgpr::two_pi * 2.0, 0.2});
    for (const cdouble& z : out.values) CHECK(std::abs(z) == 0.0);
}

TEST_CASE("morlet transform is analytic-oriented on the center cosine", "[baselines]") {
    // the phase must advance at +omega0 (counterclockwise), not -omega0
    const double omega0 = cgpr::two_pi * 2.0;
    const TimeGrid grid = TimeGrid::regular(0.0, 0.01, 300);
    std::vector<double> v(grid.size());
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = std::cos(omega0 * grid[j]);
    const ComplexSeries out =
        cgpr::morlet_transform(SampledSignal(grid, v), cgpr::WaveletParams{omega0, 0.2});
    const cgpr::InstAttrs attrs = cgpr::extract_attrs(out);
    for (std::size_t j = 100; j < 200; ++j) {
        CHECK(attrs.frequency[j] == Catch::Approx(omega0).epsilon(1e-3));
    }
}

TEST_CASE("wavelet frequency response is the shifted Gaussian", "[baselines]") {
    const double omega0 = cgpr::two_pi * 2.0, mu = 0.2;
    const std::size_t n = 400;
    const double dt = 0.01;
    const TimeGrid grid = TimeGrid::regular(-2.0, dt, n);
    std::vector<cdouble> row(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double tau = grid[j];
        row[j] = std::exp(-tau * tau / (2.0 * mu * mu)) * std::polar(1.0, omega0 * tau);
    }
    const auto spec = cgpr::fft::forward(row);
    for (std::size_t k = 0; k < n; ++k) {
        const double xi = cgpr::fft::bin_frequency(k, n, dt);
        if (std::abs(xi - omega0) > 2.0 / mu) continue;
        const double expected =
            std::sqrt(cgpr::two_pi) * mu * std::exp(-0.5 * mu * mu * (xi - omega0) * (xi - omega0));
        CHECK(std::abs(spec[k]) * dt == Catch::Approx(expected).epsilon(1e-6));
    }
}

TEST_CASE("wavelet parameter validation", "[baselines]") {
    CHECK_THROWS_AS(cgpr::WaveletParams(0.0, 0.2), std::invalid_argument);
    CHECK_THROWS_AS(cgpr::WaveletParams(1.0, -0.2), std::invalid_argument);
    CHECK_NOTHROW(cgpr::WaveletParams(0.5, 0.5)); // omega0*mu < 1 warns but passes
}
