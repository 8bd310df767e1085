// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 CGPR Project Contributors

#include <catch2/catch_amalgamated.hpp>

#include "cgpr/random.hpp"
#include "cgpr/stats.hpp"
#include "oracles.hpp"

TEST_CASE("mad basics", "[stats]") {
    const std::vector<double> a{1.0, 2.0, 3.0, 4.0};
    const std::vector<bool> all(4, true);
    CHECK(cgpr::mad(a, a, all) == 0.0);

    std::vector<double> shifted = a;
    for (double& x : shifted) x += 0.75;
    CHECK(cgpr::mad(shifted, a, all) == Catch::Approx(0.75));

    std::vector<double> alt = a;
    for (std::size_t j = 0; j < alt.size(); ++j) alt[j] += (j % 2 == 0 ? 1.0 : -1.0);
    CHECK(cgpr::mad(alt, a, all) == Catch::Approx(1.0));

    CHECK_THROWS_AS(cgpr::mad(a, a, std::vector<bool>(4, false)), std::invalid_argument);
}

TEST_CASE("mad triangle inequality on a shared mask", "[stats]") {
    cgpr::Rng rng(5);
    std::vector<double> a(64), b(64), c(64);
    std::vector<bool> mask(64);
    for (std::size_t j = 0; j < 64; ++j) {
        a[j] = rng.normal();
        b[j] = rng.normal();
        c[j] = rng.normal();
        mask[j] = rng.uniform() < 0.8;
    }
    mask[0] = true;
    CHECK(cgpr::mad(a, c, mask) <= cgpr::mad(a, b, mask) + cgpr::mad(b, c, mask) + 1e-12);
}

TEST_CASE("wilcoxon extremes", "[stats]") {
    const std::vector<double> ones(50, 1.0);
    const cgpr::WilcoxonResult strong = cgpr::wilcoxon_signed_rank(ones);
    CHECK(strong.p_value < 1e-8);

    std::vector<double> alt(50);
    for (std::size_t j = 0; j < 50; ++j) alt[j] = j % 2 == 0 ? 1.0 : -1.0;
    const cgpr::WilcoxonResult null_case = cgpr::wilcoxon_signed_rank(alt);
    CHECK(null_case.p_value > 0.5);
}

TEST_CASE("wilcoxon rejects tiny samples and drops zeros", "[stats]") {
    std::vector<double> d(9, 1.0);
    CHECK_THROWS_AS(cgpr::wilcoxon_signed_rank(d), std::invalid_argument);
    // 12 entries but only 9 nonzero
    std::vector<double> z(12, 1.0);
    z[0] = z[5] = z[11] = 0.0;
    CHECK_THROWS_AS(cgpr::wilcoxon_signed_rank(z), std::invalid_argument);
}

TEST_CASE("wilcoxon statistic is invariant under positive rescaling", "[stats]") {
    cgpr::Rng rng(11);
    std::vector<double> d(25);
    for (double& x : d) x = rng.normal();
    std::vector<double> scaled = d;
    for (double& x : scaled) x *= 37.5;
    const auto r1 = cgpr::wilcoxon_signed_rank(d);
    const auto r2 = cgpr::wilcoxon_signed_rank(scaled);
    CHECK(r1.statistic == r2.statistic);
    CHECK(r1.p_value == r2.p_value);
}

TEST_CASE("wilcoxon agrees with exact enumeration at n = 12", "[stats]") {
    cgpr::Rng rng(21);
    std::vector<double> d(12);
    for (double& x : d) x = rng.normal() + 0.4;
    const auto approx = cgpr::wilcoxon_signed_rank(d);
    const auto exact = oracle::exact_wilcoxon(d);
    CHECK(approx.statistic == exact.statistic);
    // normal approximation with continuity correction vs the exact law
    CHECK(approx.p_value == Catch::Approx(exact.p_value).margin(0.03));
}

TEST_CASE("wilcoxon matches the SciPy reference at n = 30", "[stats]") {
    // reference: scipy.stats.wilcoxon(d, zero_method='wilcox', correction=True,
    // mode='approx'); W+ = 314, p = 0.0957063463571929
    const std::vector<double> d{
        1.32886,   1.94192,  1.44672,  -0.67318,  -1.0928,   0.367196, 1.16135,  0.809187,
        2.11029,   1.05084,  0.93976,  -0.431323, -0.807717, 1.78441,  0.348912, 1.11152,
        -1.07642,  -0.136371, -0.991092, -0.475679, 1.20306,  -1.18058, -0.234093, 0.463789,
        -0.36847,  0.04771,  0.078138, 0.718139,  -0.131255, 0.572261};
    const auto r = cgpr::wilcoxon_signed_rank(d);
    CHECK(r.statistic == Catch::Approx(314.0));
    CHECK(r.p_value == Catch::Approx(0.09570634635719293).margin(1e-3));
}
