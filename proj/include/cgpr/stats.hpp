// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 CGPR Project Contributors

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "cgpr/core.hpp"

namespace cgpr {

/// Mean absolute deviation over the masked points.
inline double mad(const std::vector<double>& estimate, const std::vector<double>& truth,
                  const std::vector<bool>& mask) {
    if (estimate.size() != truth.size() || estimate.size() != mask.size()) {
        throw std::invalid_argument("mad: length mismatch");
    }
    double sum = 0.0;
    std::size_t count = 0;
    for (std::size_t j = 0; j < estimate.size(); ++j) {
        if (!mask[j]) continue;
        sum += std::abs(estimate[j] - truth[j]);
        ++count;
    }
    if (count == 0) throw std::invalid_argument("mad: empty mask");
    return sum / static_cast<double>(count);
}

struct WilcoxonResult {
    double statistic; // W+, the sum of ranks of positive differences
    double p_value;   // two-sided, normal approximation
    std::size_t n_used;
};

/// Two-sided Wilcoxon signed-rank test on paired differences. Zeros are
/// dropped before ranking; ties receive average ranks and the normal
/// approximation uses the tie-corrected variance and a 0.5 continuity
/// correction.
inline WilcoxonResult wilcoxon_signed_rank(const std::vector<double>& diffs) {
    std::vector<double> d;
    d.reserve(diffs.size());
    for (double x : diffs) {
        if (x != 0.0) d.push_back(x);
    }
    const std::size_t n = d.size();
    if (n < 10) {
        throw std::invalid_argument("wilcoxon_signed_rank: need at least 10 nonzero differences");
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&d](std::size_t a, std::size_t b) { return std::abs(d[a]) < std::abs(d[b]); });
    std::vector<double> rank(n);
    double tie_term = 0.0;
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && std::abs(d[order[j + 1]]) == std::abs(d[order[i]])) ++j;
        const double avg_rank = 0.5 * static_cast<double>(i + j) + 1.0;
        for (std::size_t k = i; k <= j; ++k) rank[order[k]] = avg_rank;
        const double t = static_cast<double>(j - i + 1);
        tie_term += t * t * t - t;
        i = j + 1;
    }
    double w_plus = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        if (d[k] > 0.0) w_plus += rank[k];
    }
    const double nn = static_cast<double>(n);
    const double mean = nn * (nn + 1.0) / 4.0;
    const double var = nn * (nn + 1.0) * (2.0 * nn + 1.0) / 24.0 - tie_term / 48.0;
    double p = 1.0;
    if (var > 0.0) {
        const double dev = std::max(0.0, std::abs(w_plus - mean) - 0.5);
        p = std::erfc(dev / std::sqrt(2.0 * var));
    }
    return WilcoxonResult{w_plus, std::min(p, 1.0), n};
}

} // namespace cgpr
