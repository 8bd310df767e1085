// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 CGPR Project Contributors

#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "cgpr/core.hpp"

namespace cgpr {

/// Instantaneous attributes of a complex-valued series: modulus, unwrapped
/// argument and its time derivative. Points where the modulus is exactly zero
/// have no defined phase; they are flagged and their unwrapped phase is filled
/// by linear interpolation between the nearest valid neighbours.
struct InstAttrs {
    TimeGrid grid;
    std::vector<double> amplitude;
    std::vector<double> phase_unwrapped;
    std::vector<double> frequency; // rad/s
    std::vector<bool> flagged;     // true where |z| == 0 (phase undefined)
};

/// Wrap an angle to the principal interval (-pi, pi]. Ties at exactly pi
/// resolve upward (+pi).
inline double wrap_phase(double x) {
    double w = x - two_pi * std::ceil((x - pi) / two_pi);
    // guard against rounding pushing the result onto -pi
    if (w <= -pi) w += two_pi;
    return w;
}

/// Unwrap a sequence of principal-value phases: successive differences are
/// mapped to (-pi, pi] and accumulated, so raw jumps above pi gain +-2pi.
inline std::vector<double> unwrap_phase(const std::vector<double>& raw) {
    std::vector<double> out(raw.size());
    if (raw.empty()) return out;
    out[0] = raw[0];
    for (std::size_t j = 1; j < raw.size(); ++j) {
        out[j] = out[j - 1] + wrap_phase(raw[j] - raw[j - 1]);
    }
    return out;
}

namespace detail {

// Derivative of y on the grid: central differences inside, one-sided at the
// ends.
inline std::vector<double> grid_derivative(const TimeGrid& grid, const std::vector<double>& y) {
    const std::size_t n = y.size();
    std::vector<double> d(n);
    d[0] = (y[1] - y[0]) / (grid[1] - grid[0]);
    for (std::size_t j = 1; j + 1 < n; ++j) {
        d[j] = (y[j + 1] - y[j - 1]) / (grid[j + 1] - grid[j - 1]);
    }
    d[n - 1] = (y[n - 1] - y[n - 2]) / (grid[n - 1] - grid[n - 2]);
    return d;
}

// Replace flagged entries by linear interpolation between the nearest valid
// neighbours; runs touching the boundary extend the nearest valid value.
inline void fill_flagged(const TimeGrid& grid, std::vector<double>& phase,
                         const std::vector<bool>& flagged) {
    const std::size_t n = phase.size();
    std::size_t j = 0;
    while (j < n) {
        if (!flagged[j]) {
            ++j;
            continue;
        }
        std::size_t end = j;
        while (end < n && flagged[end]) ++end;
        const bool has_left = j > 0;
        const bool has_right = end < n;
        for (std::size_t k = j; k < end; ++k) {
            if (has_left && has_right) {
                const double t0 = grid[j - 1], t1 = grid[end];
                const double w = (grid[k] - t0) / (t1 - t0);
                phase[k] = (1.0 - w) * phase[j - 1] + w * phase[end];
            } else if (has_left) {
                phase[k] = phase[j - 1];
            } else if (has_right) {
                phase[k] = phase[end];
            } else {
                phase[k] = 0.0; // entire series flagged
            }
        }
        j = end;
    }
}

} // namespace detail

/// Extract instantaneous amplitude, unwrapped phase and frequency from a
/// complex-valued series.
inline InstAttrs extract_attrs(const ComplexSeries& z) {
    const std::size_t n = z.size();
    std::vector<double> amplitude(n), raw(n);
    std::vector<bool> flagged(n, false);
    for (std::size_t j = 0; j < n; ++j) {
        amplitude[j] = std::abs(z.values[j]);
        if (amplitude[j] == 0.0) {
            flagged[j] = true;
            raw[j] = 0.0;
        } else {
            raw[j] = std::arg(z.values[j]);
        }
    }
    // Unwrap across valid points only; a flagged point must not inject its
    // placeholder argument into the accumulation.
    std::vector<double> phase(n, 0.0);
    std::size_t prev_valid = n;
    for (std::size_t j = 0; j < n; ++j) {
        if (flagged[j]) continue;
        phase[j] = (prev_valid == n) ? raw[j]
                                     : phase[prev_valid] + wrap_phase(raw[j] - raw[prev_valid]);
        prev_valid = j;
    }
    detail::fill_flagged(z.grid, phase, flagged);
    std::vector<double> frequency = detail::grid_derivative(z.grid, phase);
    return InstAttrs{z.grid, std::move(amplitude), std::move(phase), std::move(frequency),
                     std::move(flagged)};
}

/// Multiply by a Hann window: 0.5*(1 - cos(2 pi j / (n-1))).
inline SampledSignal hann_taper(const SampledSignal& s) {
    const std::size_t n = s.size();
    std::vector<double> out(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double w =
            0.5 * (1.0 - std::cos(two_pi * static_cast<double>(j) / static_cast<double>(n - 1)));
        out[j] = s.values[j] * w;
    }
    return SampledSignal(s.grid, std::move(out));
}

/// The Hann window itself, for tapering derived series consistently.
inline std::vector<double> hann_window(std::size_t n) {
    std::vector<double> w(n);
    for (std::size_t j = 0; j < n; ++j) {
        w[j] = 0.5 * (1.0 - std::cos(two_pi * static_cast<double>(j) / static_cast<double>(n - 1)));
    }
    return w;
}

} // namespace cgpr
