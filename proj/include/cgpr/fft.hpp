// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 CGPR Project Contributors

#pragma once

#include <bit>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "cgpr/core.hpp"

namespace cgpr::fft {

namespace detail {

// Iterative radix-2 Cooley-Tukey, in place. n must be a power of two.
inline void radix2(std::vector<cdouble>& a, bool inverse) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = (inverse ? two_pi : -two_pi) / static_cast<double>(len);
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t k = 0; k < len / 2; ++k) {
                const cdouble w = std::polar(1.0, ang * static_cast<double>(k));
                const cdouble u = a[i + k];
                const cdouble v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
            }
        }
    }
}

// Bluestein chirp-z transform for arbitrary n; reduces to a power-of-two
// circular convolution. Chirp exponents are taken mod 2n to keep the phase
// arguments small.
inline void bluestein(std::vector<cdouble>& a, bool inverse) {
    const std::size_t n = a.size();
    const double sign = inverse ? 1.0 : -1.0;
    std::vector<cdouble> chirp(n);
    for (std::size_t j = 0; j < n; ++j) {
        const std::uint64_t j2 = (static_cast<std::uint64_t>(j) * j) % (2 * n);
        chirp[j] = std::polar(1.0, sign * pi * static_cast<double>(j2) / static_cast<double>(n));
    }
    std::size_t m = 1;
    while (m < 2 * n - 1) m <<= 1;
    std::vector<cdouble> fa(m, cdouble{0.0, 0.0});
    std::vector<cdouble> fb(m, cdouble{0.0, 0.0});
    for (std::size_t j = 0; j < n; ++j) fa[j] = a[j] * chirp[j];
    for (std::size_t j = 0; j < n; ++j) {
        fb[j] = std::conj(chirp[j]);
        if (j > 0) fb[m - j] = std::conj(chirp[j]);
    }
    radix2(fa, false);
    radix2(fb, false);
    for (std::size_t j = 0; j < m; ++j) fa[j] *= fb[j];
    radix2(fa, true);
    const double scale = 1.0 / static_cast<double>(m);
    for (std::size_t j = 0; j < n; ++j) a[j] = fa[j] * scale * chirp[j];
}

} // namespace detail

/// In-place DFT of arbitrary length. Forward is unnormalized
/// (X_k = sum_j x_j e^{-2pi i jk/n}); inverse carries the 1/n factor.
inline void transform(std::vector<cdouble>& a, bool inverse) {
    const std::size_t n = a.size();
    if (n == 0) throw std::invalid_argument("fft: empty input");
    if (n == 1) return;
    if (std::has_single_bit(n)) {
        detail::radix2(a, inverse);
    } else {
        detail::bluestein(a, inverse);
    }
    if (inverse) {
        const double scale = 1.0 / static_cast<double>(n);
        for (auto& z : a) z *= scale;
    }
}

inline std::vector<cdouble> forward(std::vector<cdouble> a) {
    transform(a, false);
    return a;
}

inline std::vector<cdouble> inverse(std::vector<cdouble> a) {
    transform(a, true);
    return a;
}

/// Signed harmonic index of DFT bin k: 0..n/2 map to themselves, the upper
/// half maps to negative indices. The Nyquist bin (even n, k = n/2) is
/// reported positive; callers that need it special-cased test is_nyquist.
inline double signed_bin_index(std::size_t k, std::size_t n) {
    return (2 * k <= n) ? static_cast<double>(k)
                        : static_cast<double>(k) - static_cast<double>(n);
}

inline bool is_nyquist(std::size_t k, std::size_t n) { return n % 2 == 0 && 2 * k == n; }

/// Signed frequency (rad/s) of DFT bin k for sample spacing dt.
inline double bin_frequency(std::size_t k, std::size_t n, double dt) {
    return two_pi * signed_bin_index(k, n) / (static_cast<double>(n) * dt);
}

} // namespace cgpr::fft
