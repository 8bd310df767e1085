// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 CGPR Project Contributors

#include <catch2/catch_amalgamated.hpp>

#include "cgpr/fft.hpp"
#include "cgpr/random.hpp"
#include "oracles.hpp"

using cgpr::cdouble;

namespace {

std::vector<cdouble> random_series(std::size_t n, std::uint64_t seed) {
    cgpr::Rng rng(seed);
    std::vector<cdouble> x(n);
    for (auto& z : x) z = cdouble{rng.normal(), rng.normal()};
    return x;
}

double max_abs_diff(const std::vector<cdouble>& a, const std::vector<cdouble>& b) {
    double m = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) m = std::max(m, std::abs(a[j] - b[j]));
    return m;
}

} // namespace

TEST_CASE("fft matches the direct DFT for mixed sizes", "[fft]") {
    for (std::size_t n : {2u, 3u, 4u, 5u, 8u, 12u, 16u, 100u, 128u, 200u, 257u, 512u}) {
        const auto x = random_series(n, 42 + n);
        const auto fast = cgpr::fft::forward(x);
        const auto slow = oracle::naive_dft(x, false);
        INFO("n = " << n);
        CHECK(max_abs_diff(fast, slow) < 1e-9 * std::sqrt(static_cast<double>(n)));
    }
}

TEST_CASE("fft inverse round trip", "[fft]") {
    for (std::size_t n : {7u, 64u, 200u, 300u}) {
        const auto x = random_series(n, 7 + n);
        const auto back = cgpr::fft::inverse(cgpr::fft::forward(x));
        CHECK(max_abs_diff(back, x) < 1e-12 * static_cast<double>(n));
    }
}

TEST_CASE("signed bin indices", "[fft]") {
    // n = 8: 0 1 2 3 4(Ny) -3 -2 -1
    CHECK(cgpr::fft::signed_bin_index(0, 8) == 0.0);
    CHECK(cgpr::fft::signed_bin_index(3, 8) == 3.0);
    CHECK(cgpr::fft::signed_bin_index(4, 8) == 4.0);
    CHECK(cgpr::fft::is_nyquist(4, 8));
    CHECK(cgpr::fft::signed_bin_index(5, 8) == -3.0);
    CHECK(cgpr::fft::signed_bin_index(7, 8) == -1.0);
    // n = 5: 0 1 2 -2 -1
    CHECK(cgpr::fft::signed_bin_index(2, 5) == 2.0);
    CHECK(cgpr::fft::signed_bin_index(3, 5) == -2.0);
    CHECK_FALSE(cgpr::fft::is_nyquist(2, 5));
}
