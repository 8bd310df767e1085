// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 CGPR Project Contributors

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cgpr {

using cdouble = std::complex<double>;
inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// Thrown when a covariance solve cannot be factorized even after jitter
/// escalation.
class conditioning_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline bool all_finite(const std::vector<double>& v) {
    return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

inline bool all_finite(const std::vector<cdouble>& v) {
    return std::all_of(v.begin(), v.end(), [](const cdouble& z) {
        return std::isfinite(z.real()) && std::isfinite(z.imag());
    });
}

} // namespace detail

/// An ordered set of sample times, in seconds. Spacing may be irregular.
class TimeGrid {
public:
    explicit TimeGrid(std::vector<double> points) : points_(std::move(points)) {
        if (points_.size() < 2) {
            throw std::invalid_argument("TimeGrid: need at least 2 points");
        }
        for (std::size_t j = 0; j < points_.size(); ++j) {
            if (!std::isfinite(points_[j])) {
                throw std::invalid_argument("TimeGrid: non-finite time stamp");
            }
            if (j > 0 && points_[j] <= points_[j - 1]) {
                throw std::invalid_argument("TimeGrid: points must be strictly increasing");
            }
        }
    }

    static TimeGrid regular(double t0, double dt, std::size_t n) {
        if (dt <= 0.0) throw std::invalid_argument("TimeGrid::regular: dt must be positive");
        std::vector<double> pts(n);
        for (std::size_t j = 0; j < n; ++j) pts[j] = t0 + dt * static_cast<double>(j);
        return TimeGrid(std::move(pts));
    }

    const std::vector<double>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    double operator[](std::size_t j) const { return points_[j]; }
    double front() const { return points_.front(); }
    double back() const { return points_.back(); }
    double span() const { return points_.back() - points_.front(); }
    double mean_step() const { return span() / static_cast<double>(points_.size() - 1); }

    /// True when every successive spacing deviates from the mean spacing by
    /// less than rel_tol (relative to the mean spacing).
    bool is_uniform(double rel_tol = 1e-6) const {
        const double mean = mean_step();
        for (std::size_t j = 1; j < points_.size(); ++j) {
            if (std::abs((points_[j] - points_[j - 1]) - mean) > rel_tol * mean) return false;
        }
        return true;
    }

    bool operator==(const TimeGrid& other) const { return points_ == other.points_; }

private:
    std::vector<double> points_;
};

/// A real-valued series sampled on a time grid: the observable signal.
struct SampledSignal {
    TimeGrid grid;
    std::vector<double> values;

    SampledSignal(TimeGrid g, std::vector<double> v) : grid(std::move(g)), values(std::move(v)) {
        if (values.size() != grid.size()) {
            throw std::invalid_argument("SampledSignal: value/grid length mismatch");
        }
        if (!detail::all_finite(values)) {
            throw std::invalid_argument("SampledSignal: non-finite value");
        }
    }

    std::size_t size() const { return values.size(); }
};

/// A complex-valued series sampled on a time grid: analytic representations,
/// wavelet outputs and regression posterior means all live here.
struct ComplexSeries {
    TimeGrid grid;
    std::vector<cdouble> values;

    ComplexSeries(TimeGrid g, std::vector<cdouble> v) : grid(std::move(g)), values(std::move(v)) {
        if (values.size() != grid.size()) {
            throw std::invalid_argument("ComplexSeries: value/grid length mismatch");
        }
        if (!detail::all_finite(values)) {
            throw std::invalid_argument("ComplexSeries: non-finite value");
        }
    }

    std::size_t size() const { return values.size(); }
};

// --- logging ---------------------------------------------------------------

enum class LogLevel : int { error = 0, warn = 1, info = 2, debug = 3 };

namespace detail {

inline LogLevel log_threshold() {
    static const LogLevel level = [] {
        const char* env = std::getenv("CGPR_LOG");
        if (!env) return LogLevel::warn;
        const std::string s(env);
        if (s == "error") return LogLevel::error;
        if (s == "warn") return LogLevel::warn;
        if (s == "info") return LogLevel::info;
        if (s == "debug") return LogLevel::debug;
        return LogLevel::warn;
    }();
    return level;
}

} // namespace detail

inline void log(LogLevel level, const std::string& msg) {
    if (static_cast<int>(level) > static_cast<int>(detail::log_threshold())) return;
    static const char* names[] = {"error", "warn", "info", "debug"};
    std::fprintf(stderr, "[cgpr:%s] %s\n", names[static_cast<int>(level)], msg.c_str());
}

} // namespace cgpr
