// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 CGPR Project Contributors

// Test-only reference implementations, independent of the library paths they
// check.

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "cgpr/core.hpp"

namespace oracle {

// Direct O(n^2) DFT with the library's sign and normalization conventions.
inline std::vector<cgpr::cdouble> naive_dft(const std::vector<cgpr::cdouble>& x, bool inverse) {
    const std::size_t n = x.size();
    std::vector<cgpr::cdouble> out(n, {0.0, 0.0});
    const double sign = inverse ? 1.0 : -1.0;
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t j = 0; j < n; ++j) {
            const double ang = sign * cgpr::two_pi * static_cast<double>(j) *
                               static_cast<double>(k) / static_cast<double>(n);
            out[k] += x[j] * std::polar(1.0, ang);
        }
        if (inverse) out[k] /= static_cast<double>(n);
    }
    return out;
}

// Exact two-sided Wilcoxon signed-rank p-value by enumerating all 2^n sign
// assignments (feasible for n <= 20). Ranks are taken from the |d| ordering
// with average ranks for ties; the p-value is the probability, under random
// signs, of a W+ at least as far from its mean as observed.
struct ExactWilcoxon {
    double statistic;
    double p_value;
};

inline ExactWilcoxon exact_wilcoxon(const std::vector<double>& diffs) {
    std::vector<double> d;
    for (double x : diffs) {
        if (x != 0.0) d.push_back(x);
    }
    const std::size_t n = d.size();
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&d](std::size_t a, std::size_t b) { return std::abs(d[a]) < std::abs(d[b]); });
    std::vector<double> rank(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && std::abs(d[order[j + 1]]) == std::abs(d[order[i]])) ++j;
        const double avg = 0.5 * static_cast<double>(i + j) + 1.0;
        for (std::size_t k = i; k <= j; ++k) rank[order[k]] = avg;
        i = j + 1;
    }
    double w_obs = 0.0, total = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        if (d[k] > 0.0) w_obs += rank[k];
        total += rank[k];
    }
    const double mean = 0.5 * total;
    const double dev_obs = std::abs(w_obs - mean);
    std::size_t count = 0;
    const std::size_t m = std::size_t{1} << n;
    for (std::size_t mask = 0; mask < m; ++mask) {
        double w = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            if (mask & (std::size_t{1} << k)) w += rank[k];
        }
        if (std::abs(w - mean) >= dev_obs - 1e-12) ++count;
    }
    return ExactWilcoxon{w_obs, static_cast<double>(count) / static_cast<double>(m)};
}

} // namespace oracle
