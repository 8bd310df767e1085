// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 CGPR Project Contributors

#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cgpr/cgpr.hpp"

namespace {

namespace fs = std::filesystem;

constexpr int exit_ok = 0;
constexpr int exit_parse = 2;
constexpr int exit_conditioning = 3;
constexpr int exit_study_failed = 4;
constexpr int exit_validation = 5;

cgpr::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw cgpr::config_error("cannot open '" + path + "'");
    cgpr::json j;
    in >> j;
    return j;
}

std::string out_path(const std::string& dir, const std::string& name) {
    return (fs::path(dir) / name).string();
}

int run_analyze(const std::string& signal_path, const std::string& config_path,
                const std::string& method, double omega0, double mu, const std::string& output) {
    const cgpr::SampledSignal signal = cgpr::read_signal_csv(signal_path);
    cgpr::ComplexSeries z = [&] {
        if (method == "hilbert") {
            return cgpr::analytic_representation(signal);
        }
        if (method == "wavelet") {
            return cgpr::morlet_transform(signal, cgpr::WaveletParams{omega0, mu});
        }
        if (method != "cgpr") {
            throw cgpr::config_error("unknown method '" + method +
                                     "' (valid: cgpr, hilbert, wavelet)");
        }
        if (config_path.empty()) {
            throw cgpr::config_error("--method cgpr requires --config");
        }
        const cgpr::AnalyzeConfig cfg = cgpr::analyze_config_from_json(load_json(config_path));
        cgpr::RegressionProblem problem{cfg.kernel, cfg.noise, signal, std::nullopt, cfg.jitter};
        return cgpr::posterior_mean_complex(problem).mean;
    }();
    const cgpr::InstAttrs attrs = cgpr::extract_attrs(z);
    cgpr::write_analysis_csv(output, z, attrs);
    cgpr::log(cgpr::LogLevel::info, "analyze: wrote " + output);
    return exit_ok;
}

int run_simulate(const std::string& study_path, const std::string& output_dir,
                 std::optional<std::uint64_t> seed_override) {
    cgpr::StudyConfig config = cgpr::study_from_json(load_json(study_path));
    if (seed_override) config.seed = *seed_override;
    const cgpr::TimeGrid grid =
        cgpr::TimeGrid::regular(config.grid.t0, config.grid.dt, config.grid.n);
    char name[64];
    if (config.kind == cgpr::StudyKind::chirplet) {
        const auto specs = cgpr::sample_chirplet_specs(config.n_trials, config.seed);
        for (std::size_t i = 0; i < specs.size(); ++i) {
            std::snprintf(name, sizeof(name), "trial_%04zu.csv", i);
            cgpr::write_ground_truth_csv(out_path(output_dir, name),
                                         cgpr::gen_chirplet(specs[i], grid));
        }
    } else {
        const auto specs = cgpr::sample_stoch_osc_specs(config.n_trials, config.seed);
        for (std::size_t i = 0; i < specs.size(); ++i) {
            std::snprintf(name, sizeof(name), "trial_%04zu.csv", i);
            cgpr::write_ground_truth_csv(out_path(output_dir, name),
                                         cgpr::gen_stoch_osc(specs[i], grid));
        }
    }
    cgpr::log(cgpr::LogLevel::info,
              "simulate: wrote " + std::to_string(config.n_trials) + " trials to " + output_dir);
    return exit_ok;
}

int run_bench(const std::string& study_path, const std::string& output_dir,
              std::optional<std::uint64_t> seed_override, std::optional<int> jobs,
              std::optional<double> trim_frac) {
    cgpr::StudyConfig config = cgpr::study_from_json(load_json(study_path));
    if (seed_override) config.seed = *seed_override;
    if (jobs) config.jobs = *jobs;
    if (trim_frac) config.trim_frac = *trim_frac;
    const cgpr::StudyReport report = cgpr::run_study(config);
    {
        std::ofstream out(out_path(output_dir, "report.json"));
        out << cgpr::report_to_json(report).dump(2) << '\n';
    }
    cgpr::write_results_csv(out_path(output_dir, "results.csv"), report);
    cgpr::write_binned_csv(out_path(output_dir, "binned.csv"), report);
    std::printf("bench: %zu trials, %zu failures, %zu pairwise tests\n", config.n_trials,
                report.failures.size(), report.pairwise_tests.size());
    for (const cgpr::PairwiseTest& t : report.pairwise_tests) {
        std::printf("  %s vs %s [%s]: W=%.1f p=%.3g\n", t.method_a.c_str(), t.method_b.c_str(),
                    t.metric.c_str(), t.statistic, t.p_value);
    }
    return exit_ok;
}

int run_inspect_kernel(const std::string& kernel_path, const std::string& output_dir,
                       double xi_max, std::size_t n_xi, double tol) {
    const cgpr::ComplexKernel kernel = cgpr::kernel_from_json(load_json(kernel_path));

    double omega0 = 0.0;
    if (const auto* p = std::get_if<cgpr::Periodic>(&kernel.base())) omega0 = p->omega0;
    if (const auto* c = std::get_if<cgpr::Cosine>(&kernel.base())) omega0 = c->omega0;
    if (xi_max <= 0.0) {
        xi_max = omega0;
        if (const auto* se = std::get_if<cgpr::SeEnvelope>(&kernel.envelope())) {
            xi_max += 6.0 / se->time_scale;
        }
        if (const auto* seb = std::get_if<cgpr::SquaredExponential>(&kernel.base())) {
            xi_max += 6.0 / seb->time_scale;
        }
        if (xi_max <= 0.0) xi_max = 10.0;
    }
    if (n_xi % 2 == 0) ++n_xi; // keep xi = 0 on the grid
    std::vector<double> xi(n_xi);
    for (std::size_t j = 0; j < n_xi; ++j) {
        xi[j] = -xi_max + 2.0 * xi_max * static_cast<double>(j) / static_cast<double>(n_xi - 1);
    }
    const cgpr::SpectralDiagnostics diag = cgpr::spectral_diagnostics(kernel, xi);
    cgpr::write_diagnostics_csv(out_path(output_dir, "diagnostics.csv"), diag);

    // validation grid: two periods of a periodic base, 8 time scales of an SE
    // base
    double span = 2.0;
    if (omega0 > 0.0) span = 2.0 * cgpr::two_pi / omega0;
    if (const auto* seb = std::get_if<cgpr::SquaredExponential>(&kernel.base())) {
        span = 8.0 * seb->time_scale;
    }
    const cgpr::TimeGrid vgrid = cgpr::TimeGrid::regular(0.0, span / 63.0, 64);
    const cgpr::KernelValidation v = cgpr::validate_kernel(kernel, vgrid, tol);
    std::printf("kernel validation (tol %.3g):\n", tol);
    std::printf("  hermitian residual : %.3e\n", v.hermitian_residual);
    std::printf("  even residual      : %.3e\n", v.even_residual);
    std::printf("  odd residual       : %.3e\n", v.odd_residual);
    std::printf("  min/max eigenvalue : %.3e\n", v.min_eig_ratio);
    std::printf("  result             : %s\n", v.passed ? "PASS" : "FAIL");
    return v.passed ? exit_ok : exit_validation;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"complex-valued Gaussian process signal analysis"};
    app.require_subcommand(1);

    std::string output_dir = ".";
    std::optional<std::uint64_t> seed;
    app.add_option("--output-dir", output_dir, "directory for output files");
    app.add_option("--seed", seed, "override the config seed");

    auto* analyze = app.add_subcommand("analyze", "construct a complex signal from a series");
    std::string signal_path, config_path, method = "cgpr", analyze_out = "analysis.csv";
    double wav_omega0 = cgpr::two_pi * 2.0, wav_mu = 0.2;
    analyze->add_option("signal", signal_path, "input CSV with header t,value")->required();
    analyze->add_option("--config", config_path, "regression config JSON");
    analyze->add_option("--method", method, "cgpr | hilbert | wavelet");
    analyze->add_option("--omega0", wav_omega0, "wavelet center frequency, rad/s");
    analyze->add_option("--mu", wav_mu, "wavelet localization, s");
    analyze->add_option("-o,--output", analyze_out, "output CSV name");

    auto* simulate = app.add_subcommand("simulate", "generate ground-truth trials");
    std::string sim_study;
    simulate->add_option("study", sim_study, "study config JSON")->required();

    auto* bench = app.add_subcommand("bench", "run a comparative study");
    std::string bench_study;
    std::optional<int> jobs;
    std::optional<double> trim_frac;
    bench->add_option("study", bench_study, "study config JSON")->required();
    bench->add_option("--jobs", jobs, "worker threads for trials");
    bench->add_option("--trim-frac", trim_frac, "boundary fraction excluded from errors");

    auto* inspect = app.add_subcommand("inspect-kernel", "spectral diagnostics and validation");
    std::string kernel_path;
    double xi_max = 0.0, tol = 1e-8;
    std::size_t n_xi = 2049;
    inspect->add_option("kernel", kernel_path, "kernel config JSON")->required();
    inspect->add_option("--xi-max", xi_max, "half-width of the frequency grid, rad/s");
    inspect->add_option("--n-xi", n_xi, "number of frequency points");
    inspect->add_option("--tol", tol, "validation tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? exit_ok : exit_parse;
    }

    try {
        std::error_code ec;
        fs::create_directories(output_dir, ec);
        if (analyze->parsed()) {
            return run_analyze(signal_path, config_path, method, wav_omega0, wav_mu,
                               out_path(output_dir, analyze_out));
        }
        if (simulate->parsed()) {
            return run_simulate(sim_study, output_dir, seed);
        }
        if (bench->parsed()) {
            return run_bench(bench_study, output_dir, seed, jobs, trim_frac);
        }
        return run_inspect_kernel(kernel_path, output_dir, xi_max, n_xi, tol);
    } catch (const cgpr::conditioning_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_conditioning;
    } catch (const cgpr::study_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_study_failed;
    } catch (const cgpr::CsvError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_parse;
    } catch (const cgpr::config_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_parse;
    } catch (const cgpr::json::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_parse;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_parse;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
