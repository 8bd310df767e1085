// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 CGPR Project Contributors

#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "cgpr/core.hpp"
#include "cgpr/kernels.hpp"
#include "cgpr/noise.hpp"

namespace cgpr {

struct SolveDiagnostics {
    double jitter_used = 0.0;  // absolute diagonal inflation applied
    int attempts = 0;          // factorization attempts (1 = first try)
    double cond_estimate = 0.0; // (max diag L / min diag L)^2, a cheap proxy
};

namespace detail {

// Cholesky with escalating diagonal jitter: start at jitter_rel * mean(diag),
// multiply by 10 up to three times, then give up.
struct RobustLlt {
    Eigen::LLT<Eigen::MatrixXd> llt;
    SolveDiagnostics diag;
};

inline RobustLlt robust_llt(const Eigen::MatrixXd& a, double jitter_rel) {
    if (jitter_rel < 0.0) throw std::invalid_argument("jitter must be >= 0");
    const double mean_diag = a.diagonal().mean();
    const double base = (jitter_rel > 0.0 ? jitter_rel : 1e-14) * std::abs(mean_diag);
    RobustLlt out;
    double jit = jitter_rel > 0.0 ? base : 0.0;
    for (int attempt = 1; attempt <= 4; ++attempt) {
        Eigen::MatrixXd work = a;
        work.diagonal().array() += jit;
        out.llt.compute(work);
        if (out.llt.info() == Eigen::Success) {
            out.diag.jitter_used = jit;
            out.diag.attempts = attempt;
            const auto l = out.llt.matrixLLT().diagonal();
            const double lmax = l.maxCoeff();
            const double lmin = l.minCoeff();
            out.diag.cond_estimate = lmin > 0.0 ? (lmax / lmin) * (lmax / lmin) : INFINITY;
            return out;
        }
        jit = jit == 0.0 ? base * 10.0 : jit * 10.0;
    }
    throw conditioning_error("covariance factorization failed after jitter escalation (final jitter " +
                             std::to_string(jit / 10.0) + ")");
}

} // namespace detail

/// Posterior mean of a real-valued GP: m = Kx (K + Q)^{-1} s, solved through
/// a jittered Cholesky factorization of K + Q.
inline std::vector<double> posterior_mean_real(const std::function<double(double)>& kernel_real,
                                               const NoiseModel& noise, const SampledSignal& signal,
                                               const TimeGrid& targets, double jitter = 1e-10) {
    const auto n = static_cast<Eigen::Index>(signal.size());
    Eigen::MatrixXd a = gram_real(kernel_real, signal.grid, signal.grid);
    a += build_noise_cov(noise, signal.grid);
    detail::RobustLlt f = detail::robust_llt(a, jitter);
    Eigen::VectorXd s(n);
    for (Eigen::Index j = 0; j < n; ++j) s(j) = signal.values[static_cast<std::size_t>(j)];
    const Eigen::VectorXd w = f.llt.solve(s);
    const Eigen::MatrixXd kx = gram_real(kernel_real, targets, signal.grid);
    const Eigen::VectorXd m = kx * w;
    return std::vector<double>(m.data(), m.data() + m.size());
}

/// A complex-valued GP regression problem: Hermitian prior kernel, real
/// observation noise, observed signal, and optional off-sample target grid.
struct RegressionProblem {
    ComplexKernel kernel;
    NoiseModel noise;
    SampledSignal signal;
    std::optional<TimeGrid> targets; // defaults to the sample grid
    double jitter = 1e-10;           // relative diagonal inflation
};

struct PosteriorResult {
    ComplexSeries mean;
    SolveDiagnostics diagnostics;
};

/// Posterior expectation of the latent complex signal given real-valued
/// observations: m = K (Re K + Q)^{-1} s at the sample points, with the
/// complex cross-Gram in front for off-sample targets. Only one real
/// factorization is needed; the complex product is two real solves.
inline PosteriorResult posterior_mean_complex(const RegressionProblem& problem) {
    const TimeGrid& sgrid = problem.signal.grid;
    const auto n = static_cast<Eigen::Index>(problem.signal.size());
    const Eigen::MatrixXcd k = gram(problem.kernel, sgrid, sgrid);
    Eigen::MatrixXd a = k.real();
    a += build_noise_cov(problem.noise, sgrid);
    detail::RobustLlt f = detail::robust_llt(a, problem.jitter);
    Eigen::VectorXd s(n);
    for (Eigen::Index j = 0; j < n; ++j) s(j) = problem.signal.values[static_cast<std::size_t>(j)];
    const Eigen::VectorXd w = f.llt.solve(s);

    const bool on_samples = !problem.targets || *problem.targets == sgrid;
    const TimeGrid& tgrid = on_samples ? sgrid : *problem.targets;
    Eigen::VectorXcd m;
    if (on_samples) {
        m = k * w.cast<cdouble>();
    } else {
        const Eigen::MatrixXcd kx = gram(problem.kernel, tgrid, sgrid);
        m = kx * w.cast<cdouble>();
    }
    std::vector<cdouble> values(m.data(), m.data() + m.size());
    return PosteriorResult{ComplexSeries(tgrid, std::move(values)), f.diag};
}

} // namespace cgpr
