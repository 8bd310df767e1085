// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 CGPR Project Contributors

#include <catch2/catch_amalgamated.hpp>

#include "cgpr/random.hpp"
#include "cgpr/signals.hpp"

using cgpr::cdouble;
using cgpr::ComplexSeries;
using cgpr::SampledSignal;
using cgpr::TimeGrid;

TEST_CASE("pure complex exponential has unit amplitude and constant frequency", "[signals]") {
    const double omega = cgpr::two_pi * 3.0;
    const TimeGrid grid = TimeGrid::regular(0.0, 0.01, 200);
    std::vector<cdouble> z(grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j) z[j] = std::polar(1.0, omega * grid[j]);
    const cgpr::InstAttrs attrs = cgpr::extract_attrs(ComplexSeries(grid, z));
    for (std::size_t j = 0; j < grid.size(); ++j) {
        CHECK(attrs.amplitude[j] == Catch::Approx(1.0).margin(1e-12));
        CHECK_FALSE(attrs.flagged[j]);
    }
    for (std::size_t j = 1; j + 1 < grid.size(); ++j) {
        CHECK(attrs.frequency[j] == Catch::Approx(omega).epsilon(1e-6));
    }
}

TEST_CASE("constant series has zero phase and frequency", "[signals]") {
    const TimeGrid grid = TimeGrid::regular(0.0, 0.1, 16);
    const ComplexSeries z(grid, std::vector<cdouble>(16, cdouble{1.0, 0.0}));
    const cgpr::InstAttrs attrs = cgpr::extract_attrs(z);
    for (std::size_t j = 0; j < 16; ++j) {
        CHECK(attrs.amplitude[j] == 1.0);
        CHECK(attrs.phase_unwrapped[j] == 0.0);
        CHECK(attrs.frequency[j] == 0.0);
    }
}

TEST_CASE("phase unwrap round trip on zero-free series", "[signals]") {
    cgpr::Rng rng(99);
    const TimeGrid grid = TimeGrid::regular(0.0, 0.02, 400);
    std::vector<cdouble> z(grid.size());
    for (auto& v : z) {
        // keep the modulus well away from zero
        v = std::polar(0.5 + rng.uniform(), rng.uniform(-cgpr::pi, cgpr::pi));
    }
    const ComplexSeries series(grid, z);
    const cgpr::InstAttrs attrs = cgpr::extract_attrs(series);
    for (std::size_t j = 0; j < z.size(); ++j) {
        CHECK(cgpr::wrap_phase(attrs.phase_unwrapped[j]) ==
              Catch::Approx(std::arg(z[j])).margin(1e-12));
    }
}

TEST_CASE("amplitude and phase reconstruct the series", "[signals]") {
    cgpr::Rng rng(7);
    const TimeGrid grid = TimeGrid::regular(0.0, 0.01, 300);
    std::vector<cdouble> z(grid.size());
    for (std::size_t j = 0; j < z.size(); ++j) {
        z[j] = std::polar(0.1 + rng.uniform(), 5.0 * grid[j] + rng.uniform(-0.3, 0.3));
    }
    const cgpr::InstAttrs attrs = cgpr::extract_attrs(ComplexSeries(grid, z));
    for (std::size_t j = 0; j < z.size(); ++j) {
        const cdouble rec = attrs.amplitude[j] * std::polar(1.0, attrs.phase_unwrapped[j]);
        CHECK(std::abs(rec - z[j]) < 1e-12);
    }
}

TEST_CASE("zero-modulus points are flagged and interpolated", "[signals]") {
    const TimeGrid grid(std::vector<double>{0.0, 0.5, 1.0});
    const ComplexSeries z(grid, {cdouble{1.0, 0.0}, cdouble{0.0, 0.0}, cdouble{0.0, 1.0}});
    const cgpr::InstAttrs attrs = cgpr::extract_attrs(z);
    CHECK_FALSE(attrs.flagged[0]);
    CHECK(attrs.flagged[1]);
    CHECK_FALSE(attrs.flagged[2]);
    CHECK(attrs.amplitude[1] == 0.0);
    CHECK(attrs.phase_unwrapped[0] == Catch::Approx(0.0).margin(1e-15));
    CHECK(attrs.phase_unwrapped[2] == Catch::Approx(cgpr::pi / 2).margin(1e-15));
    CHECK(attrs.phase_unwrapped[1] == Catch::Approx(cgpr::pi / 4).margin(1e-12));
}

TEST_CASE("unwrap ties at pi resolve upward", "[signals]") {
    CHECK(cgpr::wrap_phase(cgpr::pi) == Catch::Approx(cgpr::pi));
    CHECK(cgpr::wrap_phase(-cgpr::pi) == Catch::Approx(cgpr::pi));
    CHECK(cgpr::wrap_phase(3.0 * cgpr::pi) == Catch::Approx(cgpr::pi));
}

TEST_CASE("hann taper endpoints and peak", "[signals]") {
    const TimeGrid g3 = TimeGrid::regular(0.0, 1.0, 3);
    const SampledSignal s3(g3, std::vector<double>(3, 1.0));
    const SampledSignal t3 = cgpr::hann_taper(s3);
    CHECK(t3.values[0] == 0.0);
    CHECK(t3.values[1] == Catch::Approx(1.0));
    CHECK(t3.values[2] == Catch::Approx(0.0).margin(1e-15));

    cgpr::Rng rng(3);
    const TimeGrid g9 = TimeGrid::regular(0.0, 0.25, 9);
    std::vector<double> v(9);
    for (auto& x : v) x = rng.normal();
    const SampledSignal t9 = cgpr::hann_taper(SampledSignal(g9, v));
    CHECK(t9.values.front() == 0.0);
    CHECK(std::abs(t9.values.back()) < 1e-15);
    // odd length: midpoint passes through untouched
    const SampledSignal ones(g9, std::vector<double>(9, 1.0));
    CHECK(cgpr::hann_taper(ones).values[4] == Catch::Approx(1.0));
}

TEST_CASE("time grid invariants", "[signals]") {
    CHECK_THROWS_AS(TimeGrid(std::vector<double>{0.0}), std::invalid_argument);
    CHECK_THROWS_AS(TimeGrid(std::vector<double>{0.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(TimeGrid(std::vector<double>{0.0, -1.0}), std::invalid_argument);
    const TimeGrid uniform = TimeGrid::regular(0.0, 0.01, 50);
    CHECK(uniform.is_uniform());
    const TimeGrid ragged(std::vector<double>{0.0, 0.01, 0.03, 0.04});
    CHECK_FALSE(ragged.is_uniform());
}
