// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 CGPR Project Contributors

#pragma once

#include <atomic>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "cgpr/baselines.hpp"
#include "cgpr/core.hpp"
#include "cgpr/regression.hpp"
#include "cgpr/signals.hpp"
#include "cgpr/simulate.hpp"
#include "cgpr/stats.hpp"

namespace cgpr {

/// Thrown when more than 10% of study trials fail.
class study_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class StudyKind { chirplet, stoch_osc };

struct GridSpec {
    double t0 = 0.0;
    double dt = 0.01;
    std::size_t n = 200; // 2 s at 100 Hz
};

/// One analysis method and its parameters. Names: cgpr-periodic,
/// cgpr-harmonic, analytic, wavelet.
struct MethodSpec {
    std::string name;
    double omega0 = 0.0; // rad/s (kernel or wavelet center)
    double rho = 0.0;    // periodic kernel smoothness
    double mu = 0.0;     // envelope / wavelet time scale, s
    double lambda = 0.0; // white observation-noise variance
};

struct StudyConfig {
    StudyKind kind = StudyKind::chirplet;
    std::size_t n_trials = 100;
    std::uint64_t seed = 0;
    GridSpec grid;
    double noise_sd = 0.0;
    std::vector<MethodSpec> methods;
    double trim_frac = 0.0; // fraction of points trimmed at each boundary
    int jobs = 1;
};

struct TrialResult {
    std::size_t trial = 0;
    std::string method;
    double mad_amplitude = 0.0;
    double mad_frequency = 0.0;      // rad/s
    double initial_frequency = 0.0;  // rad/s, for frequency-binned summaries
};

struct PairwiseTest {
    std::string method_a;
    std::string method_b;
    std::string metric; // "amplitude" | "frequency"
    double statistic = 0.0;
    double p_value = 1.0;
};

struct TrialFailure {
    std::size_t trial = 0;
    std::string message;
};

struct StudyReport {
    StudyConfig config;
    std::vector<TrialResult> trials;
    std::vector<PairwiseTest> pairwise_tests;
    std::vector<TrialFailure> failures;
};

/// Run one method on one signal. cgpr kernels may be passed in prebuilt (they
/// are immutable and shared across trials).
inline ComplexSeries run_method(const MethodSpec& m, const SampledSignal& s,
                                const std::optional<ComplexKernel>& prebuilt = std::nullopt) {
    if (m.name == "analytic") {
        return analytic_representation(s);
    }
    if (m.name == "wavelet") {
        return morlet_transform(s, WaveletParams{m.omega0, m.mu});
    }
    if (m.name == "cgpr-periodic" || m.name == "cgpr-harmonic") {
        ComplexKernel kernel =
            prebuilt ? *prebuilt
                     : (m.name == "cgpr-periodic"
                            ? ComplexKernel(Periodic{m.omega0, m.rho}, SeEnvelope{m.mu}, FftHilbert{})
                            : ComplexKernel(Cosine{m.omega0}, SeEnvelope{m.mu}, AnalyticHilbert{}));
        RegressionProblem problem{std::move(kernel), NoiseModel::white(m.lambda), s, std::nullopt,
                                  1e-10};
        return posterior_mean_complex(problem).mean;
    }
    throw std::invalid_argument("unknown method '" + m.name +
                                "' (valid: cgpr-periodic, cgpr-harmonic, analytic, wavelet)");
}

namespace detail {

inline std::vector<bool> error_mask(const InstAttrs& attrs, double trim_frac) {
    const std::size_t n = attrs.amplitude.size();
    std::vector<bool> mask(n, true);
    for (std::size_t j = 0; j < n; ++j) {
        if (attrs.flagged[j]) mask[j] = false;
    }
    const auto trim = static_cast<std::size_t>(std::floor(trim_frac * static_cast<double>(n)));
    for (std::size_t j = 0; j < trim && j < n; ++j) {
        mask[j] = false;
        mask[n - 1 - j] = false;
    }
    return mask;
}

} // namespace detail

/// Run a full comparative study: generate ground truth per trial, corrupt it
/// if requested, apply every method, accumulate per-trial mean absolute
/// deviations and close with pairwise Wilcoxon signed-rank tests on each
/// metric. Per-trial failures are recorded and skipped; more than 10% of
/// failing trials aborts. Trials are independent and may run on several
/// threads; the report is assembled in trial order either way.
inline StudyReport run_study(const StudyConfig& config) {
    if (config.methods.empty()) throw std::invalid_argument("run_study: no methods configured");
    if (config.trim_frac < 0.0 || config.trim_frac >= 0.5) {
        throw std::invalid_argument("run_study: trim_frac must be in [0, 0.5)");
    }
    const TimeGrid grid = TimeGrid::regular(config.grid.t0, config.grid.dt, config.grid.n);

    std::vector<ChirpletSpec> chirp_specs;
    std::vector<StochOscSpec> stoch_specs;
    if (config.kind == StudyKind::chirplet) {
        chirp_specs = sample_chirplet_specs(config.n_trials, config.seed);
    } else {
        stoch_specs = sample_stoch_osc_specs(config.n_trials, config.seed);
    }

    // Kernels are immutable; build them once and share across trials.
    std::vector<std::optional<ComplexKernel>> kernels(config.methods.size());
    for (std::size_t m = 0; m < config.methods.size(); ++m) {
        const MethodSpec& spec = config.methods[m];
        if (spec.name == "cgpr-periodic") {
            kernels[m] = ComplexKernel(Periodic{spec.omega0, spec.rho}, SeEnvelope{spec.mu},
                                       FftHilbert{});
        } else if (spec.name == "cgpr-harmonic") {
            kernels[m] = ComplexKernel(Cosine{spec.omega0}, SeEnvelope{spec.mu}, AnalyticHilbert{});
        } else if (spec.name != "analytic" && spec.name != "wavelet") {
            throw std::invalid_argument("unknown method '" + spec.name +
                                        "' (valid: cgpr-periodic, cgpr-harmonic, analytic, wavelet)");
        }
    }

    std::vector<std::vector<TrialResult>> per_trial(config.n_trials);
    std::vector<std::optional<TrialFailure>> fail(config.n_trials);

    auto run_trial = [&](std::size_t i) {
        try {
            const GroundTruth truth = config.kind == StudyKind::chirplet
                                          ? gen_chirplet(chirp_specs[i], grid)
                                          : gen_stoch_osc(stoch_specs[i], grid);
            SampledSignal signal = truth.signal;
            if (config.noise_sd > 0.0) {
                signal = add_white_noise(signal, config.noise_sd,
                                         derive_seed(config.seed, 0xA000 + i));
            }
            const double init_freq = truth.frequency.front();
            for (std::size_t m = 0; m < config.methods.size(); ++m) {
                const ComplexSeries z = run_method(config.methods[m], signal, kernels[m]);
                const InstAttrs attrs = extract_attrs(z);
                const std::vector<bool> mask = detail::error_mask(attrs, config.trim_frac);
                TrialResult r;
                r.trial = i;
                r.method = config.methods[m].name;
                r.mad_amplitude = mad(attrs.amplitude, truth.amplitude, mask);
                r.mad_frequency = mad(attrs.frequency, truth.frequency, mask);
                r.initial_frequency = init_freq;
                per_trial[i].push_back(std::move(r));
            }
        } catch (const std::exception& e) {
            per_trial[i].clear();
            fail[i] = TrialFailure{i, e.what()};
        }
    };

    const int jobs = std::max(1, config.jobs);
    if (jobs == 1 || config.n_trials < 2) {
        for (std::size_t i = 0; i < config.n_trials; ++i) run_trial(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> workers;
        const auto worker_count = static_cast<std::size_t>(jobs);
        workers.reserve(worker_count);
        for (std::size_t w = 0; w < worker_count; ++w) {
            workers.emplace_back([&] {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= config.n_trials) return;
                    run_trial(i);
                }
            });
        }
        for (auto& t : workers) t.join();
    }

    StudyReport report;
    report.config = config;
    for (std::size_t i = 0; i < config.n_trials; ++i) {
        if (fail[i]) {
            report.failures.push_back(*fail[i]);
        } else {
            for (auto& r : per_trial[i]) report.trials.push_back(std::move(r));
        }
    }
    if (config.n_trials > 0 &&
        static_cast<double>(report.failures.size()) > 0.1 * static_cast<double>(config.n_trials)) {
        std::string msg = "run_study: " + std::to_string(report.failures.size()) + " of " +
                          std::to_string(config.n_trials) + " trials failed; first failure: " +
                          report.failures.front().message;
        throw study_error(msg);
    }

    // A failure drops its whole trial, so the surviving per-method error
    // series are aligned by construction.
    std::map<std::string, std::vector<std::pair<double, double>>> series;
    for (const TrialResult& r : report.trials) {
        series[r.method].push_back({r.mad_amplitude, r.mad_frequency});
    }
    for (std::size_t a = 0; a < config.methods.size(); ++a) {
        for (std::size_t b = a + 1; b < config.methods.size(); ++b) {
            const auto& va = series[config.methods[a].name];
            const auto& vb = series[config.methods[b].name];
            for (const bool amplitude : {true, false}) {
                std::vector<double> diffs(va.size());
                std::size_t nonzero = 0;
                for (std::size_t i = 0; i < va.size(); ++i) {
                    diffs[i] = amplitude ? va[i].first - vb[i].first : va[i].second - vb[i].second;
                    if (diffs[i] != 0.0) ++nonzero;
                }
                if (nonzero < 10) continue; // too few pairs for the test
                const WilcoxonResult w = wilcoxon_signed_rank(diffs);
                report.pairwise_tests.push_back(PairwiseTest{config.methods[a].name,
                                                             config.methods[b].name,
                                                             amplitude ? "amplitude" : "frequency",
                                                             w.statistic, w.p_value});
            }
        }
    }
    return report;
}

/// Median of a copy; used by frequency-binned summaries and the CLI.
inline double median(std::vector<double> v) {
    if (v.empty()) throw std::invalid_argument("median: empty");
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

} // namespace cgpr
