// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 CGPR Project Contributors

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "cgpr/core.hpp"
#include "cgpr/fft.hpp"

namespace cgpr {

// --- real stationary kernels -------------------------------------------------

struct SquaredExponential {
    double time_scale; // s
};

struct Periodic {
    double omega0; // rad/s
    double rho;    // smoothness
};

struct Cosine {
    double omega0; // rad/s
};

using RealKernelSpec = std::variant<SquaredExponential, Periodic, Cosine>;

namespace detail {

inline void check_positive(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw std::invalid_argument(std::string(what) + " must be positive and finite");
    }
}

} // namespace detail

inline void validate_spec(const RealKernelSpec& spec) {
    std::visit(
        [](const auto& k) {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, SquaredExponential>) {
                detail::check_positive(k.time_scale, "SquaredExponential time_scale");
            } else if constexpr (std::is_same_v<T, Periodic>) {
                detail::check_positive(k.omega0, "Periodic omega0");
                detail::check_positive(k.rho, "Periodic rho");
            } else {
                detail::check_positive(k.omega0, "Cosine omega0");
            }
        },
        spec);
}

/// Evaluate the real stationary kernel at lag tau. Even in tau.
inline double eval_real(const RealKernelSpec& spec, double tau) {
    return std::visit(
        [tau](const auto& k) -> double {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, SquaredExponential>) {
                const double u = tau / k.time_scale;
                return std::exp(-0.5 * u * u);
            } else if constexpr (std::is_same_v<T, Periodic>) {
                const double s = std::sin(0.5 * k.omega0 * tau);
                return std::exp(-2.0 * s * s / (k.rho * k.rho));
            } else {
                return std::cos(k.omega0 * tau);
            }
        },
        spec);
}

// --- envelopes ----------------------------------------------------------------

struct ConstantEnvelope {};

struct SeEnvelope {
    double time_scale; // s
};

using EnvelopeSpec = std::variant<ConstantEnvelope, SeEnvelope>;

inline void validate_spec(const EnvelopeSpec& env) {
    if (const auto* se = std::get_if<SeEnvelope>(&env)) {
        detail::check_positive(se->time_scale, "SeEnvelope time_scale");
    }
}

inline double eval_envelope(const EnvelopeSpec& env, double tau) {
    if (const auto* se = std::get_if<SeEnvelope>(&env)) {
        const double u = tau / se->time_scale;
        return std::exp(-0.5 * u * u);
    }
    return 1.0;
}

// --- spectra ------------------------------------------------------------------
// Fourier convention throughout: k~(xi) = (1/2pi) \int e^{-i xi tau} k(tau) dtau.

/// One spectral line: a delta of the given mass at a signed frequency.
struct SpectrumLine {
    double freq;   // rad/s
    double weight; // delta mass under the 1/2pi convention
};

inline bool has_line_spectrum(const RealKernelSpec& spec) {
    return !std::holds_alternative<SquaredExponential>(spec);
}

/// Spectral density of a squared-exponential kernel (closed form).
inline double se_spectral_density(double time_scale, double xi) {
    return time_scale / std::sqrt(two_pi) * std::exp(-0.5 * time_scale * time_scale * xi * xi);
}

namespace detail {

// Harmonic weights of the periodic kernel, computed from a one-period DFT so
// the result stays finite for small rho (the Bessel-series form overflows).
// Returns one-sided weights w_m for m = 0..; the spectrum is symmetric.
inline std::vector<double> periodic_line_weights(const Periodic& k, double rel_cutoff = 1e-15) {
    constexpr std::size_t n = 8192;
    const double period = two_pi / k.omega0;
    std::vector<cdouble> buf(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double tau = period * static_cast<double>(j) / static_cast<double>(n);
        buf[j] = eval_real(RealKernelSpec{k}, tau);
    }
    fft::transform(buf, false);
    std::vector<double> w;
    const double w0 = buf[0].real() / static_cast<double>(n);
    w.push_back(w0);
    for (std::size_t m = 1; m < n / 2; ++m) {
        const double wm = buf[m].real() / static_cast<double>(n);
        if (wm < rel_cutoff * w0 && m > 1) break;
        w.push_back(wm);
    }
    return w;
}

} // namespace detail

/// Line spectrum of a periodic or harmonic kernel (throws for continuous
/// spectra; see has_line_spectrum).
inline std::vector<SpectrumLine> spectrum_lines(const RealKernelSpec& spec) {
    if (const auto* c = std::get_if<Cosine>(&spec)) {
        return {{-c->omega0, 0.5}, {c->omega0, 0.5}};
    }
    if (const auto* p = std::get_if<Periodic>(&spec)) {
        const std::vector<double> w = detail::periodic_line_weights(*p);
        std::vector<SpectrumLine> lines;
        for (std::size_t m = w.size(); m-- > 1;) {
            lines.push_back({-static_cast<double>(m) * p->omega0, w[m]});
        }
        lines.push_back({0.0, w[0]});
        for (std::size_t m = 1; m < w.size(); ++m) {
            lines.push_back({static_cast<double>(m) * p->omega0, w[m]});
        }
        return lines;
    }
    throw std::invalid_argument("spectrum_lines: kernel has a continuous spectrum");
}

// --- discrete Hilbert transform ------------------------------------------------

/// Discrete Hilbert transform of a real sequence: DFT, multiply the
/// coefficient at signed frequency xi by -i sgn(xi) (DC and Nyquist go to
/// zero), inverse DFT. The imaginary residue of the inverse transform is of
/// rounding order and is discarded.
inline std::vector<double> discrete_hilbert(const std::vector<double>& values) {
    const std::size_t n = values.size();
    std::vector<cdouble> buf(n);
    for (std::size_t j = 0; j < n; ++j) buf[j] = cdouble{values[j], 0.0};
    fft::transform(buf, false);
    for (std::size_t k = 0; k < n; ++k) {
        const double idx = fft::signed_bin_index(k, n);
        if (idx == 0.0 || fft::is_nyquist(k, n)) {
            buf[k] = cdouble{0.0, 0.0};
        } else if (idx > 0.0) {
            buf[k] *= cdouble{0.0, -1.0};
        } else {
            buf[k] *= cdouble{0.0, 1.0};
        }
    }
    fft::transform(buf, true);
    std::vector<double> out(n);
    for (std::size_t j = 0; j < n; ++j) out[j] = buf[j].real();
    return out;
}

/// Hilbert transform of a real kernel sampled on a uniform lag grid that is
/// symmetric about zero. The grid is treated as one period of the DFT, so for
/// periodic kernels the caller should cover an integer number of periods.
inline std::vector<double> hilbert_of_kernel(const RealKernelSpec& spec, const TimeGrid& lag_grid) {
    if (!lag_grid.is_uniform()) {
        throw std::invalid_argument("hilbert_of_kernel: lag grid must be uniform");
    }
    if (std::abs(lag_grid.front() + lag_grid.back()) > 1e-9 * lag_grid.span() + 1e-12) {
        throw std::invalid_argument("hilbert_of_kernel: lag grid must be symmetric about 0");
    }
    std::vector<double> vals(lag_grid.size());
    for (std::size_t j = 0; j < lag_grid.size(); ++j) vals[j] = eval_real(spec, lag_grid[j]);
    return discrete_hilbert(vals);
}

// --- complex kernels ------------------------------------------------------------

/// Closed-form imaginary part; available for the harmonic (cosine) base only.
struct AnalyticHilbert {};

/// Imaginary part from a precomputed DFT-based Hilbert lag table with cubic
/// interpolation. lag_span <= 0 selects an automatic span (one period for
/// periodic bases, 8 time scales for the squared exponential).
struct FftHilbert {
    double lag_span = 0.0;
    std::size_t n_lags = 8192;
};

using HilbertMode = std::variant<AnalyticHilbert, FftHilbert>;

/// A Hermitian covariance function f(tau) * (k(tau) + i H k(tau)) built from a
/// real stationary base kernel and an even positive-definite envelope. With a
/// constant envelope this is a quadrature covariance function; with a
/// squared-exponential envelope a quasi-quadrature one. Immutable after
/// construction; evaluation is pure.
class ComplexKernel {
public:
    ComplexKernel(RealKernelSpec base, EnvelopeSpec envelope, HilbertMode mode = AnalyticHilbert{})
        : base_(base), envelope_(envelope), mode_(mode) {
        validate_spec(base_);
        validate_spec(envelope_);
        if (std::holds_alternative<AnalyticHilbert>(mode_)) {
            if (!std::holds_alternative<Cosine>(base_)) {
                throw std::invalid_argument(
                    "ComplexKernel: analytic Hilbert mode requires a cosine base");
            }
        } else {
            build_table(std::get<FftHilbert>(mode_));
        }
    }

    const RealKernelSpec& base() const { return base_; }
    const EnvelopeSpec& envelope() const { return envelope_; }
    const HilbertMode& mode() const { return mode_; }

    /// k(tau) of the base kernel.
    double base_at(double tau) const { return eval_real(base_, tau); }

    /// f(tau) of the envelope.
    double envelope_at(double tau) const { return eval_envelope(envelope_, tau); }

    /// H k(tau) of the base kernel. Odd in tau by construction.
    double hilbert_base_at(double tau) const {
        if (tau == 0.0) return 0.0;
        const double sign = tau > 0.0 ? 1.0 : -1.0;
        const double at = std::abs(tau);
        if (const auto* c = std::get_if<Cosine>(&base_);
            c && std::holds_alternative<AnalyticHilbert>(mode_)) {
            return sign * std::sin(c->omega0 * at);
        }
        return sign * table_lookup(at);
    }

    /// f(tau) * (k(tau) + i H k(tau)). Hermitian: eval(-tau) == conj(eval(tau))
    /// exactly, because both factors are evaluated at |tau|.
    cdouble eval(double tau) const {
        const double at = std::abs(tau);
        const double f = eval_envelope(envelope_, at);
        return cdouble{f * eval_real(base_, at), f * hilbert_base_at(tau)};
    }

private:
    void build_table(const FftHilbert& cfg) {
        const std::size_t n = cfg.n_lags < 64 ? 64 : cfg.n_lags;
        if (!std::holds_alternative<SquaredExponential>(base_)) {
            // Periodic base: one exact period, periodic wrap-around, no span
            // limit.
            const double omega0 = std::holds_alternative<Periodic>(base_)
                                      ? std::get<Periodic>(base_).omega0
                                      : std::get<Cosine>(base_).omega0;
            period_ = two_pi / omega0;
            periodic_wrap_ = true;
            table_dtau_ = period_ / static_cast<double>(n);
            std::vector<double> vals(n);
            for (std::size_t j = 0; j < n; ++j) {
                vals[j] = eval_real(base_, table_dtau_ * static_cast<double>(j));
            }
            table_ = discrete_hilbert(vals);
            return;
        }
        // Aperiodic base: symmetric buffer with cosine-tapered ends to
        // suppress wrap-around, keep the tau >= 0 half.
        const double ts = std::get<SquaredExponential>(base_).time_scale;
        const double half_span = std::max(cfg.lag_span, 8.0 * ts) * 1.01;
        periodic_wrap_ = false;
        table_dtau_ = 2.0 * half_span / static_cast<double>(n);
        std::vector<double> vals(n);
        const std::size_t ramp = n / 20;
        for (std::size_t j = 0; j < n; ++j) {
            const double tau = -half_span + table_dtau_ * static_cast<double>(j);
            double v = eval_real(base_, tau);
            if (j < ramp) {
                const double c = std::sin(0.5 * pi * static_cast<double>(j) / ramp);
                v *= c * c;
            } else if (j >= n - ramp) {
                const double c = std::sin(0.5 * pi * static_cast<double>(n - 1 - j) / ramp);
                v *= c * c;
            }
            vals[j] = v;
        }
        const std::vector<double> h = discrete_hilbert(vals);
        table_.assign(h.begin() + static_cast<std::ptrdiff_t>(n / 2), h.end());
        usable_span_ = std::max(cfg.lag_span, 8.0 * ts);
    }

    // Cubic (4-point Lagrange) interpolation of the Hilbert table at
    // tau >= 0. The table is odd about 0, which supplies the ghost point for
    // the first interval.
    double table_lookup(double tau) const {
        double u;
        const std::size_t n = table_.size();
        if (periodic_wrap_) {
            u = std::fmod(tau, period_);
        } else {
            if (tau > usable_span_) {
                throw std::out_of_range("ComplexKernel: lag outside the Hilbert table span");
            }
            u = tau;
        }
        const double x = u / table_dtau_;
        auto i = static_cast<std::ptrdiff_t>(std::floor(x));
        const double t = x - static_cast<double>(i);
        auto at = [&](std::ptrdiff_t idx) -> double {
            if (periodic_wrap_) {
                idx %= static_cast<std::ptrdiff_t>(n);
                if (idx < 0) idx += static_cast<std::ptrdiff_t>(n);
                return table_[static_cast<std::size_t>(idx)];
            }
            if (idx < 0) return -table_[static_cast<std::size_t>(-idx)]; // odd extension
            if (idx >= static_cast<std::ptrdiff_t>(n)) return table_[n - 1];
            return table_[static_cast<std::size_t>(idx)];
        };
        const double ym1 = at(i - 1), y0 = at(i), y1 = at(i + 1), y2 = at(i + 2);
        // Lagrange basis on nodes -1, 0, 1, 2 evaluated at t in [0, 1]
        const double a = -t * (t - 1.0) * (t - 2.0) / 6.0;
        const double b = (t + 1.0) * (t - 1.0) * (t - 2.0) / 2.0;
        const double c = -(t + 1.0) * t * (t - 2.0) / 2.0;
        const double d = (t + 1.0) * t * (t - 1.0) / 6.0;
        return a * ym1 + b * y0 + c * y1 + d * y2;
    }

    RealKernelSpec base_;
    EnvelopeSpec envelope_;
    HilbertMode mode_;
    std::vector<double> table_;
    double table_dtau_ = 0.0;
    double period_ = 0.0;
    double usable_span_ = 0.0;
    bool periodic_wrap_ = false;
};

// --- Gram matrices and validation -----------------------------------------------

/// Cross-covariance matrix: entry (j, l) = k(a_j - b_l). With a == b the
/// result is Hermitian.
inline Eigen::MatrixXcd gram(const ComplexKernel& k, const TimeGrid& a, const TimeGrid& b) {
    Eigen::MatrixXcd g(a.size(), b.size());
    for (std::size_t j = 0; j < a.size(); ++j) {
        for (std::size_t l = 0; l < b.size(); ++l) {
            g(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(l)) = k.eval(a[j] - b[l]);
        }
    }
    return g;
}

/// Real-kernel Gram matrix for the real regression path and GP sampling.
inline Eigen::MatrixXd gram_real(const std::function<double(double)>& k, const TimeGrid& a,
                                 const TimeGrid& b) {
    Eigen::MatrixXd g(a.size(), b.size());
    for (std::size_t j = 0; j < a.size(); ++j) {
        for (std::size_t l = 0; l < b.size(); ++l) {
            g(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(l)) = k(a[j] - b[l]);
        }
    }
    return g;
}

struct KernelValidation {
    double hermitian_residual = 0.0; // max |k(-tau) - conj(k(tau))|
    double even_residual = 0.0;      // max |Re k(tau) - Re k(-tau)|
    double odd_residual = 0.0;       // max |Im k(tau) + Im k(-tau)|
    double min_eig_ratio = 0.0;      // min eig of Gram relative to max eig
    double tol = 0.0;
    bool passed = false;
};

/// Check Hermitianity, even/odd symmetry of the parts, and positive
/// semi-definiteness of the Gram matrix on the given grid. Accepts any
/// evaluation function so that deliberately broken kernels can be probed.
inline KernelValidation validate_kernel(const std::function<cdouble(double)>& eval,
                                        const TimeGrid& grid, double tol) {
    if (grid.size() < 8) {
        throw std::invalid_argument("validate_kernel: need at least 8 grid points");
    }
    KernelValidation rep;
    rep.tol = tol;
    const std::size_t n = grid.size();
    Eigen::MatrixXcd g(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t l = 0; l < n; ++l) {
            const double tau = grid[j] - grid[l];
            const cdouble kp = eval(tau);
            const cdouble km = eval(-tau);
            rep.hermitian_residual = std::max(rep.hermitian_residual, std::abs(km - std::conj(kp)));
            rep.even_residual = std::max(rep.even_residual, std::abs(kp.real() - km.real()));
            rep.odd_residual = std::max(rep.odd_residual, std::abs(kp.imag() + km.imag()));
            g(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(l)) = kp;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (g + g.adjoint()),
                                                       Eigen::EigenvaluesOnly);
    const double min_eig = es.eigenvalues().minCoeff();
    const double max_eig = es.eigenvalues().maxCoeff();
    rep.min_eig_ratio = max_eig > 0.0 ? min_eig / max_eig : min_eig;
    rep.passed = rep.hermitian_residual <= tol && rep.even_residual <= tol &&
                 rep.odd_residual <= tol && rep.min_eig_ratio >= -tol;
    return rep;
}

inline KernelValidation validate_kernel(const ComplexKernel& k, const TimeGrid& grid, double tol) {
    return validate_kernel([&k](double tau) { return k.eval(tau); }, grid, tol);
}

} // namespace cgpr
