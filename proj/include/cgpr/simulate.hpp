// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 CGPR Project Contributors

#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "cgpr/core.hpp"
#include "cgpr/kernels.hpp"
#include "cgpr/random.hpp"
#include "cgpr/regression.hpp"
#include "cgpr/signals.hpp"

namespace cgpr {

/// Deterministic sub-seed derivation (splitmix64), so that distinct uses of
/// one study seed never share an underlying stream.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t salt) {
    std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

enum class PhaseLaw { linear, quadratic, exponential };

/// A transient oscillation t^k exp(-t/b) cos(Phi(t) + phi0) with one of three
/// monotone frequency-growth laws.
struct ChirpletSpec {
    int envelope_exponent; // k in {1, 2, 3}
    double width;          // b, s
    double omega0;         // initial angular frequency, rad/s
    double accel;          // frequency factor a
    PhaseLaw law;
    double phi0; // initial phase, (-pi, pi]
};

struct StochOscSpec {
    double amp_time_scale;   // mu_x, s
    double omega0;           // mean angular frequency, rad/s
    double phase_time_scale; // mu_P, s
    std::uint64_t seed;
};

/// A simulated signal with its exact instantaneous attributes.
struct GroundTruth {
    SampledSignal signal;
    std::vector<double> amplitude;
    std::vector<double> phase;
    std::vector<double> frequency; // rad/s
};

inline GroundTruth gen_chirplet(const ChirpletSpec& spec, const TimeGrid& grid) {
    if (grid.front() < 0.0) throw std::invalid_argument("gen_chirplet: grid must start at t >= 0");
    if (spec.envelope_exponent < 1 || spec.envelope_exponent > 3) {
        throw std::invalid_argument("gen_chirplet: envelope exponent must be 1, 2 or 3");
    }
    detail::check_positive(spec.width, "chirplet width");
    detail::check_positive(spec.omega0, "chirplet omega0");
    detail::check_positive(spec.accel, "chirplet accel");
    const std::size_t n = grid.size();
    std::vector<double> amp(n), phase(n), freq(n), sig(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double t = grid[j];
        amp[j] = std::pow(t, spec.envelope_exponent) * std::exp(-t / spec.width);
        double big_phi = 0.0, dphi = 0.0;
        switch (spec.law) {
            case PhaseLaw::linear:
                big_phi = (spec.omega0 + spec.accel * t) * t;
                dphi = spec.omega0 + 2.0 * spec.accel * t;
                break;
            case PhaseLaw::quadratic:
                big_phi = (spec.omega0 + spec.accel * t * t) * t;
                dphi = spec.omega0 + 3.0 * spec.accel * t * t;
                break;
            case PhaseLaw::exponential:
                big_phi = (spec.omega0 + spec.accel * std::exp(0.5 * t)) * t;
                dphi = spec.omega0 + spec.accel * std::exp(0.5 * t) * (1.0 + 0.5 * t);
                break;
        }
        phase[j] = big_phi + spec.phi0;
        freq[j] = dphi;
        sig[j] = amp[j] * std::cos(phase[j]);
    }
    return GroundTruth{SampledSignal(grid, std::move(sig)), std::move(amp), std::move(phase),
                       std::move(freq)};
}

/// Draw one path of a GP with the given mean function and real stationary
/// kernel: mean + L z with L the jittered Cholesky factor of the Gram matrix
/// and z seeded standard normals. variance_scale = 0 returns the mean.
inline std::vector<double> sample_gp(const std::function<double(double)>& mean_fn,
                                     const RealKernelSpec& kernel, const TimeGrid& grid,
                                     std::uint64_t seed, double variance_scale = 1.0) {
    const std::size_t n = grid.size();
    std::vector<double> out(n);
    for (std::size_t j = 0; j < n; ++j) out[j] = mean_fn(grid[j]);
    if (variance_scale == 0.0) return out;
    Eigen::MatrixXd k = gram_real([&kernel](double tau) { return eval_real(kernel, tau); }, grid,
                                  grid);
    k *= variance_scale;
    detail::RobustLlt f = detail::robust_llt(k, 1e-10);
    Rng rng(seed);
    Eigen::VectorXd z(static_cast<Eigen::Index>(n));
    for (Eigen::Index j = 0; j < z.size(); ++j) z(j) = rng.normal();
    const Eigen::VectorXd path = f.llt.matrixL() * z;
    for (std::size_t j = 0; j < n; ++j) out[j] += path(static_cast<Eigen::Index>(j));
    return out;
}

/// Stochastic oscillation: amplitude sqrt(x^2 + 1) - 1 with x a GP of mean
/// sqrt(3), phase a GP of mean omega0 t plus a uniform initial phase, and a
/// Hann taper applied to signal and recorded amplitude alike. The ground-truth
/// frequency is the central-difference derivative of the sampled phase path,
/// matching the scheme used by extract_attrs.
inline GroundTruth gen_stoch_osc(const StochOscSpec& spec, const TimeGrid& grid) {
    detail::check_positive(spec.amp_time_scale, "stoch osc amp_time_scale");
    detail::check_positive(spec.omega0, "stoch osc omega0");
    detail::check_positive(spec.phase_time_scale, "stoch osc phase_time_scale");
    const std::size_t n = grid.size();
    const std::vector<double> x =
        sample_gp([](double) { return std::sqrt(3.0); }, SquaredExponential{spec.amp_time_scale},
                  grid, derive_seed(spec.seed, 1));
    const double omega0 = spec.omega0;
    std::vector<double> phase =
        sample_gp([omega0](double t) { return omega0 * t; },
                  SquaredExponential{spec.phase_time_scale}, grid, derive_seed(spec.seed, 2));
    Rng phi_rng(derive_seed(spec.seed, 3));
    const double phi0 = phi_rng.uniform(-pi, pi);
    for (double& p : phase) p += phi0;

    const std::vector<double> w = hann_window(n);
    std::vector<double> amp(n), sig(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double a = std::sqrt(x[j] * x[j] + 1.0) - 1.0;
        amp[j] = a * w[j];
        sig[j] = amp[j] * std::cos(phase[j]);
    }
    std::vector<double> freq = detail::grid_derivative(grid, phase);
    return GroundTruth{SampledSignal(grid, std::move(sig)), std::move(amp), std::move(phase),
                       std::move(freq)};
}

/// The band-overlap demonstration signal exp(-|t|/sigma) cos(2 pi f0 t).
inline SampledSignal gen_demo_signal(double sigma, double f0, const TimeGrid& grid) {
    detail::check_positive(sigma, "demo signal sigma");
    detail::check_positive(f0, "demo signal f0");
    std::vector<double> v(grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j) {
        const double t = grid[j];
        v[j] = std::exp(-std::abs(t) / sigma) * std::cos(two_pi * f0 * t);
    }
    return SampledSignal(grid, std::move(v));
}

/// Add seeded Gaussian white noise of the given standard deviation.
inline SampledSignal add_white_noise(const SampledSignal& s, double sd, std::uint64_t seed) {
    if (sd < 0.0) throw std::invalid_argument("add_white_noise: sd must be >= 0");
    if (sd == 0.0) return s;
    Rng rng(seed);
    std::vector<double> v = s.values;
    for (double& x : v) x += sd * rng.normal();
    return SampledSignal(s.grid, std::move(v));
}

/// Paper-protocol parameter draws. Frequency brackets are in Hz and converted
/// to rad/s: chirplets draw b in [0.1, 0.3], f0 in [0.1, 2] Hz, k in {1,2,3},
/// a in [0.1, 0.4] Hz, a phase law uniform over the three laws, and a uniform
/// initial phase.
inline std::vector<ChirpletSpec> sample_chirplet_specs(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<ChirpletSpec> specs;
    specs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        ChirpletSpec s{};
        s.width = rng.uniform(0.1, 0.3);
        s.omega0 = two_pi * rng.uniform(0.1, 2.0);
        s.envelope_exponent = static_cast<int>(rng.uniform_int(1, 3));
        s.accel = two_pi * rng.uniform(0.1, 0.4);
        s.law = static_cast<PhaseLaw>(rng.uniform_int(0, 2));
        s.phi0 = rng.uniform(-pi, pi);
        specs.push_back(s);
    }
    return specs;
}

/// Stochastic-oscillation draws: mu_x in [0.1, 0.4], f0 in [1, 3] Hz,
/// mu_P in [0.1, 0.4]; each spec carries a derived path seed.
inline std::vector<StochOscSpec> sample_stoch_osc_specs(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<StochOscSpec> specs;
    specs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        StochOscSpec s{};
        s.amp_time_scale = rng.uniform(0.1, 0.4);
        s.omega0 = two_pi * rng.uniform(1.0, 3.0);
        s.phase_time_scale = rng.uniform(0.1, 0.4);
        s.seed = derive_seed(seed, 0x51ED + i);
        specs.push_back(s);
    }
    return specs;
}

} // namespace cgpr
