// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 CGPR Project Contributors

#pragma once

#include <cmath>
#include <stdexcept>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "cgpr/core.hpp"

namespace cgpr {

struct WhiteNoise {
    double sigma2; // variance, contributes to the diagonal only
};

struct OrnsteinUhlenbeck {
    double nu2; // variance
    double b;   // relaxation rate, 1/s
};

using NoiseTerm = std::variant<WhiteNoise, OrnsteinUhlenbeck>;

/// Observation-noise covariance as a superposition of white and
/// Ornstein-Uhlenbeck terms.
struct NoiseModel {
    std::vector<NoiseTerm> terms;

    explicit NoiseModel(std::vector<NoiseTerm> t) : terms(std::move(t)) {
        if (terms.empty()) throw std::invalid_argument("NoiseModel: need at least one term");
        for (const NoiseTerm& term : terms) {
            if (const auto* w = std::get_if<WhiteNoise>(&term)) {
                if (!(w->sigma2 >= 0.0) || !std::isfinite(w->sigma2)) {
                    throw std::invalid_argument("NoiseModel: white sigma2 must be >= 0");
                }
            } else {
                const auto& ou = std::get<OrnsteinUhlenbeck>(term);
                if (!(ou.nu2 >= 0.0) || !std::isfinite(ou.nu2)) {
                    throw std::invalid_argument("NoiseModel: OU nu2 must be >= 0");
                }
                if (!(ou.b > 0.0) || !std::isfinite(ou.b)) {
                    throw std::invalid_argument("NoiseModel: OU relaxation b must be > 0");
                }
            }
        }
        if (!(variance_at_zero() > 0.0)) {
            throw std::invalid_argument("NoiseModel: total variance at zero lag must be > 0");
        }
    }

    static NoiseModel white(double sigma2) { return NoiseModel({NoiseTerm{WhiteNoise{sigma2}}}); }

    double variance_at_zero() const {
        double v = 0.0;
        for (const NoiseTerm& term : terms) {
            if (const auto* w = std::get_if<WhiteNoise>(&term)) {
                v += w->sigma2;
            } else {
                v += std::get<OrnsteinUhlenbeck>(term).nu2;
            }
        }
        return v;
    }
};

/// Q_jk = sum of nu^2 exp(-b |t_k - t_j|) over OU terms, plus sigma^2 on the
/// diagonal for white terms. Symmetric positive semi-definite.
inline Eigen::MatrixXd build_noise_cov(const NoiseModel& noise, const TimeGrid& grid) {
    const auto n = static_cast<Eigen::Index>(grid.size());
    Eigen::MatrixXd q = Eigen::MatrixXd::Zero(n, n);
    for (const NoiseTerm& term : noise.terms) {
        if (const auto* w = std::get_if<WhiteNoise>(&term)) {
            q.diagonal().array() += w->sigma2;
        } else {
            const auto& ou = std::get<OrnsteinUhlenbeck>(term);
            for (Eigen::Index j = 0; j < n; ++j) {
                for (Eigen::Index k = 0; k < n; ++k) {
                    q(j, k) += ou.nu2 * std::exp(-ou.b * std::abs(grid[static_cast<std::size_t>(k)] -
                                                                  grid[static_cast<std::size_t>(j)]));
                }
            }
        }
    }
    return q;
}

} // namespace cgpr
