// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 CGPR Project Contributors

#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "cgpr/core.hpp"
#include "cgpr/kernels.hpp"

namespace cgpr {

/// Cross-spectral eigenvalues, coherency and conditional variance of a
/// complex kernel on a frequency grid. lambda1 belongs to the eigenvector
/// (i,1)/sqrt(2) (the counterclockwise component), lambda2 to (-i,1)/sqrt(2).
struct SpectralDiagnostics {
    std::vector<double> xi;       // rad/s
    std::vector<double> lambda1;
    std::vector<double> lambda2;
    std::vector<cdouble> coherency;
    std::vector<bool> coherency_defined; // false where lambda1 + lambda2 == 0
    std::vector<double> cond_variance;
};

/// P(|eta| > eps) for a circular complex normal deviation with variance chi:
/// exp(-eps^2 / chi), degenerating to 0 as chi -> 0.
inline double deviation_probability(double chi, double eps) {
    if (!(chi >= 0.0)) throw std::invalid_argument("deviation_probability: chi must be >= 0");
    if (!(eps > 0.0)) throw std::invalid_argument("deviation_probability: eps must be > 0");
    if (chi == 0.0) return 0.0;
    return std::exp(-eps * eps / chi);
}

namespace detail {

inline void check_uniform_grid(const std::vector<double>& xi) {
    if (xi.size() < 2) throw std::invalid_argument("spectral_diagnostics: need >= 2 xi points");
    const double d = (xi.back() - xi.front()) / static_cast<double>(xi.size() - 1);
    if (!(d > 0.0)) throw std::invalid_argument("spectral_diagnostics: xi grid must increase");
    for (std::size_t j = 1; j < xi.size(); ++j) {
        if (std::abs((xi[j] - xi[j - 1]) - d) > 1e-9 * d) {
            throw std::invalid_argument("spectral_diagnostics: xi grid must be uniform");
        }
    }
}

// Eigenvalue branches with a constant envelope: lambda1 = k~(xi) h(xi),
// lambda2 = k~(xi) h(-xi), with the xi = 0 mass split evenly. Line spectra
// are assigned to the nearest grid bin.
inline void quadrature_branches(const RealKernelSpec& base, const std::vector<double>& xi,
                                std::vector<double>& l1, std::vector<double>& l2) {
    const std::size_t n = xi.size();
    if (has_line_spectrum(base)) {
        const double dxi = (xi.back() - xi.front()) / static_cast<double>(n - 1);
        for (const SpectrumLine& line : spectrum_lines(base)) {
            const double pos = (line.freq - xi.front()) / dxi;
            const auto bin = static_cast<std::ptrdiff_t>(std::llround(pos));
            if (bin < 0 || bin >= static_cast<std::ptrdiff_t>(n)) continue;
            const auto b = static_cast<std::size_t>(bin);
            if (line.freq > 0.0) {
                l1[b] += line.weight;
            } else if (line.freq < 0.0) {
                l2[b] += line.weight;
            } else {
                l1[b] += 0.5 * line.weight;
                l2[b] += 0.5 * line.weight;
            }
        }
        return;
    }
    const double ts = std::get<SquaredExponential>(base).time_scale;
    for (std::size_t j = 0; j < n; ++j) {
        const double dens = se_spectral_density(ts, xi[j]);
        if (xi[j] > 0.0) {
            l1[j] = dens;
        } else if (xi[j] < 0.0) {
            l2[j] = dens;
        } else {
            l1[j] = 0.5 * dens;
            l2[j] = 0.5 * dens;
        }
    }
}

// Eigenvalue branches with a squared-exponential envelope: the convolution
// of the masked base spectrum with the envelope transform. Line spectra
// integrate exactly; the continuous squared-exponential spectrum uses a
// trapezoid rule over [0, 8/mu_k] (the integrand is negligible beyond).
inline void quasi_quadrature_branches(const RealKernelSpec& base, double env_ts,
                                      const std::vector<double>& xi, std::vector<double>& l1,
                                      std::vector<double>& l2) {
    const std::size_t n = xi.size();
    if (has_line_spectrum(base)) {
        const std::vector<SpectrumLine> lines = spectrum_lines(base);
        for (std::size_t j = 0; j < n; ++j) {
            double a = 0.0, b = 0.0;
            for (const SpectrumLine& line : lines) {
                const double f = line.weight * se_spectral_density(env_ts, xi[j] - line.freq);
                if (line.freq > 0.0) {
                    a += f;
                } else if (line.freq < 0.0) {
                    b += f;
                } else {
                    a += 0.5 * f;
                    b += 0.5 * f;
                }
            }
            l1[j] = a;
            l2[j] = b;
        }
        return;
    }
    const double kts = std::get<SquaredExponential>(base).time_scale;
    const std::size_t m = 4097;
    const double upsilon_max = 8.0 / kts;
    const double du = upsilon_max / static_cast<double>(m - 1);
    std::vector<double> kdens(m);
    for (std::size_t i = 0; i < m; ++i) {
        kdens[i] = se_spectral_density(kts, du * static_cast<double>(i));
    }
    for (std::size_t j = 0; j < n; ++j) {
        double a = 0.0, b = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            const double u = du * static_cast<double>(i);
            const double wt = (i == 0 || i == m - 1) ? 0.5 : 1.0;
            a += wt * kdens[i] * se_spectral_density(env_ts, xi[j] - u);
            b += wt * kdens[i] * se_spectral_density(env_ts, xi[j] + u);
        }
        l1[j] = a * du;
        l2[j] = b * du;
    }
}

} // namespace detail

/// Compute the cross-spectral eigenvalues lambda1/lambda2, the coherency
/// gamma = -i (lambda1 - lambda2) / (lambda1 + lambda2) and the conditional
/// variance chi = 4 lambda1 lambda2 / (lambda1 + lambda2) on a uniform
/// frequency grid. gamma is reported as 0 at xi = 0 and flagged undefined
/// where lambda1 + lambda2 vanishes.
inline SpectralDiagnostics spectral_diagnostics(const ComplexKernel& k,
                                                const std::vector<double>& xi_grid) {
    detail::check_uniform_grid(xi_grid);
    const std::size_t n = xi_grid.size();
    SpectralDiagnostics d;
    d.xi = xi_grid;
    d.lambda1.assign(n, 0.0);
    d.lambda2.assign(n, 0.0);
    if (std::holds_alternative<ConstantEnvelope>(k.envelope())) {
        detail::quadrature_branches(k.base(), xi_grid, d.lambda1, d.lambda2);
    } else {
        const double env_ts = std::get<SeEnvelope>(k.envelope()).time_scale;
        detail::quasi_quadrature_branches(k.base(), env_ts, xi_grid, d.lambda1, d.lambda2);
    }
    d.coherency.assign(n, cdouble{0.0, 0.0});
    d.coherency_defined.assign(n, true);
    d.cond_variance.assign(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        const double sum = d.lambda1[j] + d.lambda2[j];
        if (sum <= 0.0) {
            d.coherency_defined[j] = false;
            continue;
        }
        d.cond_variance[j] = 4.0 * d.lambda1[j] * d.lambda2[j] / sum;
        if (xi_grid[j] == 0.0) continue; // reported as 0 by convention
        d.coherency[j] = cdouble{0.0, -(d.lambda1[j] - d.lambda2[j]) / sum};
    }
    return d;
}

/// Coherency recomputed from the eigen-structure: assemble the 2x2
/// cross-spectral matrix from the fixed eigenvectors (i,1)/sqrt(2) and
/// (-i,1)/sqrt(2) and take Theta12 / sqrt(Theta11 Theta22). Note the
/// assembled ratio is the complex conjugate of the reported coherency: the
/// off-diagonal entry follows the forward-lag cross-covariance convention.
inline cdouble coherency_from_eigenstructure(double lambda1, double lambda2) {
    const cdouble v1_1{0.0, 1.0 / std::sqrt(2.0)};
    const cdouble v1_2{1.0 / std::sqrt(2.0), 0.0};
    const cdouble v2_1{0.0, -1.0 / std::sqrt(2.0)};
    const cdouble v2_2{1.0 / std::sqrt(2.0), 0.0};
    const cdouble num = v1_1 * std::conj(v1_2) * lambda1 + v2_1 * std::conj(v2_2) * lambda2;
    const double t11 = std::norm(v1_1) * lambda1 + std::norm(v2_1) * lambda2;
    const double t22 = std::norm(v1_2) * lambda1 + std::norm(v2_2) * lambda2;
    const double den = std::sqrt(t11 * t22);
    if (den == 0.0) return cdouble{0.0, 0.0};
    return num / den;
}

} // namespace cgpr
