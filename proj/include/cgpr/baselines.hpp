// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 CGPR Project Contributors

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "cgpr/core.hpp"
#include "cgpr/fft.hpp"

namespace cgpr {

/// Analytic representation of a uniformly sampled signal via the frequency
/// response of the quadrature filter: strictly positive DFT bins are doubled,
/// strictly negative ones zeroed, and the DC and Nyquist bins pass through
/// unchanged so that the real part of the output reproduces the input exactly.
inline ComplexSeries analytic_representation(const SampledSignal& s) {
    if (!s.grid.is_uniform()) {
        throw std::invalid_argument("analytic_representation: grid must be uniform");
    }
    const std::size_t n = s.size();
    std::vector<cdouble> a(n);
    for (std::size_t j = 0; j < n; ++j) a[j] = cdouble{s.values[j], 0.0};
    fft::transform(a, false);
    for (std::size_t k = 0; k < n; ++k) {
        if (k == 0 || fft::is_nyquist(k, n)) continue;
        if (fft::signed_bin_index(k, n) > 0.0) {
            a[k] *= 2.0;
        } else {
            a[k] = cdouble{0.0, 0.0};
        }
    }
    fft::transform(a, true);
    return ComplexSeries(s.grid, std::move(a));
}

/// Discrete Hilbert transform: the imaginary part of the analytic
/// representation.
inline SampledSignal hilbert(const SampledSignal& s) {
    const ComplexSeries z = analytic_representation(s);
    std::vector<double> out(z.size());
    for (std::size_t j = 0; j < z.size(); ++j) out[j] = z.values[j].imag();
    return SampledSignal(s.grid, std::move(out));
}

/// Morlet wavelet parameters: center frequency (rad/s) and temporal
/// localization (s).
struct WaveletParams {
    double omega0;
    double mu;

    WaveletParams(double omega0_, double mu_) : omega0(omega0_), mu(mu_) {
        if (!(omega0 > 0.0) || !std::isfinite(omega0) || !(mu > 0.0) || !std::isfinite(mu)) {
            throw std::invalid_argument("WaveletParams: omega0 and mu must be positive finite");
        }
        if (omega0 * mu < 1.0) {
            log(LogLevel::warn, "WaveletParams: omega0*mu < 1, wavelet is far from analytic");
        }
    }
};

/// Morlet wavelet transform as a dense matrix-vector product:
/// out_j = sum_k exp(-(t_j-t_k)^2 / 2mu^2) exp(i omega0 (t_j-t_k)) s_k w_k,
/// with w_k the quadrature weight of the grid (dt on uniform grids). The
/// 1/sqrt(pi mu^2) prefactor of the continuous wavelet is dropped; phases are
/// unaffected and amplitudes carry this fixed scale.
inline ComplexSeries morlet_transform(const SampledSignal& s, const WaveletParams& p) {
    const std::size_t n = s.size();
    const auto& t = s.grid.points();
    std::vector<double> w(n);
    if (s.grid.is_uniform()) {
        const double dt = s.grid.mean_step();
        for (std::size_t k = 0; k < n; ++k) w[k] = dt;
    } else {
        w[0] = 0.5 * (t[1] - t[0]);
        for (std::size_t k = 1; k + 1 < n; ++k) w[k] = 0.5 * (t[k + 1] - t[k - 1]);
        w[n - 1] = 0.5 * (t[n - 1] - t[n - 2]);
    }
    const double inv_two_mu2 = 1.0 / (2.0 * p.mu * p.mu);
    std::vector<cdouble> out(n, cdouble{0.0, 0.0});
    for (std::size_t j = 0; j < n; ++j) {
        cdouble acc{0.0, 0.0};
        for (std::size_t k = 0; k < n; ++k) {
            const double tau = t[j] - t[k];
            const double g = std::exp(-tau * tau * inv_two_mu2);
            acc += g * std::polar(1.0, p.omega0 * tau) * (s.values[k] * w[k]);
        }
        out[j] = acc;
    }
    return ComplexSeries(s.grid, std::move(out));
}

} // namespace cgpr
