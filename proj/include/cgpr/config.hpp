// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 CGPR Project Contributors

#pragma once

#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cgpr/bench.hpp"
#include "cgpr/kernels.hpp"
#include "cgpr/noise.hpp"
#include "cgpr/regression.hpp"

namespace cgpr {

using json = nlohmann::json;

/// Configuration error: unknown keys, missing fields, bad values.
class config_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline void reject_unknown_keys(const json& j, std::initializer_list<const char*> allowed,
                                const std::string& context) {
    if (!j.is_object()) throw config_error(context + ": expected a JSON object");
    for (const auto& [key, value] : j.items()) {
        bool ok = false;
        for (const char* a : allowed) {
            if (key == a) {
                ok = true;
                break;
            }
        }
        if (!ok) throw config_error(context + ": unknown key '" + key + "'");
    }
}

inline double require_number(const json& j, const char* key, const std::string& context) {
    if (!j.contains(key)) throw config_error(context + ": missing '" + key + "'");
    if (!j[key].is_number()) throw config_error(context + ": '" + key + "' must be a number");
    return j[key].get<double>();
}

inline double number_or(const json& j, const char* key, double fallback) {
    if (!j.contains(key)) return fallback;
    return j[key].get<double>();
}

} // namespace detail

inline RealKernelSpec base_kernel_from_json(const json& j) {
    const std::string kind = j.value("kind", "");
    if (kind == "periodic") {
        detail::reject_unknown_keys(j, {"kind", "omega0", "rho"}, "kernel.base");
        return Periodic{detail::require_number(j, "omega0", "kernel.base"),
                        detail::require_number(j, "rho", "kernel.base")};
    }
    if (kind == "cosine") {
        detail::reject_unknown_keys(j, {"kind", "omega0"}, "kernel.base");
        return Cosine{detail::require_number(j, "omega0", "kernel.base")};
    }
    if (kind == "se") {
        detail::reject_unknown_keys(j, {"kind", "time_scale"}, "kernel.base");
        return SquaredExponential{detail::require_number(j, "time_scale", "kernel.base")};
    }
    throw config_error("kernel.base: kind must be one of periodic, cosine, se");
}

inline EnvelopeSpec envelope_from_json(const json& j) {
    const std::string kind = j.value("kind", "");
    if (kind == "constant") {
        detail::reject_unknown_keys(j, {"kind"}, "kernel.envelope");
        return ConstantEnvelope{};
    }
    if (kind == "se") {
        detail::reject_unknown_keys(j, {"kind", "time_scale"}, "kernel.envelope");
        return SeEnvelope{detail::require_number(j, "time_scale", "kernel.envelope")};
    }
    throw config_error("kernel.envelope: kind must be constant or se");
}

inline HilbertMode hilbert_mode_from_json(const json& j, const RealKernelSpec& base) {
    if (j.is_null()) {
        // default: closed form where available, numerical table otherwise
        if (std::holds_alternative<Cosine>(base)) return AnalyticHilbert{};
        return FftHilbert{};
    }
    const std::string kind = j.value("kind", "");
    if (kind == "analytic") {
        detail::reject_unknown_keys(j, {"kind"}, "kernel.hilbert_mode");
        return AnalyticHilbert{};
    }
    if (kind == "fft") {
        detail::reject_unknown_keys(j, {"kind", "lag_span", "n_lags"}, "kernel.hilbert_mode");
        FftHilbert mode;
        mode.lag_span = detail::number_or(j, "lag_span", 0.0);
        if (j.contains("n_lags")) mode.n_lags = j["n_lags"].get<std::size_t>();
        return mode;
    }
    throw config_error("kernel.hilbert_mode: kind must be analytic or fft");
}

inline ComplexKernel kernel_from_json(const json& j) {
    detail::reject_unknown_keys(j, {"base", "envelope", "hilbert_mode"}, "kernel");
    if (!j.contains("base")) throw config_error("kernel: missing 'base'");
    if (!j.contains("envelope")) throw config_error("kernel: missing 'envelope'");
    const RealKernelSpec base = base_kernel_from_json(j["base"]);
    const EnvelopeSpec env = envelope_from_json(j["envelope"]);
    const HilbertMode mode =
        hilbert_mode_from_json(j.contains("hilbert_mode") ? j["hilbert_mode"] : json(), base);
    return ComplexKernel(base, env, mode);
}

inline json kernel_to_json(const ComplexKernel& k) {
    json j;
    std::visit(
        [&j](const auto& b) {
            using T = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<T, Periodic>) {
                j["base"] = {{"kind", "periodic"}, {"omega0", b.omega0}, {"rho", b.rho}};
            } else if constexpr (std::is_same_v<T, Cosine>) {
                j["base"] = {{"kind", "cosine"}, {"omega0", b.omega0}};
            } else {
                j["base"] = {{"kind", "se"}, {"time_scale", b.time_scale}};
            }
        },
        k.base());
    if (const auto* se = std::get_if<SeEnvelope>(&k.envelope())) {
        j["envelope"] = {{"kind", "se"}, {"time_scale", se->time_scale}};
    } else {
        j["envelope"] = {{"kind", "constant"}};
    }
    if (const auto* fftm = std::get_if<FftHilbert>(&k.mode())) {
        j["hilbert_mode"] = {{"kind", "fft"}, {"lag_span", fftm->lag_span}, {"n_lags", fftm->n_lags}};
    } else {
        j["hilbert_mode"] = {{"kind", "analytic"}};
    }
    return j;
}

inline NoiseModel noise_from_json(const json& j) {
    if (!j.is_array()) throw config_error("noise: expected an array of terms");
    std::vector<NoiseTerm> terms;
    for (const auto& t : j) {
        const std::string kind = t.value("kind", "");
        if (kind == "white") {
            detail::reject_unknown_keys(t, {"kind", "sigma2"}, "noise.white");
            terms.push_back(WhiteNoise{detail::require_number(t, "sigma2", "noise.white")});
        } else if (kind == "ou") {
            detail::reject_unknown_keys(t, {"kind", "nu2", "b"}, "noise.ou");
            terms.push_back(OrnsteinUhlenbeck{detail::require_number(t, "nu2", "noise.ou"),
                                              detail::require_number(t, "b", "noise.ou")});
        } else {
            throw config_error("noise: kind must be white or ou");
        }
    }
    return NoiseModel(std::move(terms));
}

/// Full regression configuration for the analyze workflow.
struct AnalyzeConfig {
    ComplexKernel kernel;
    NoiseModel noise;
    double jitter = 1e-10;
};

inline AnalyzeConfig analyze_config_from_json(const json& j) {
    detail::reject_unknown_keys(j, {"kernel", "noise", "jitter"}, "config");
    if (!j.contains("kernel")) throw config_error("config: missing 'kernel'");
    if (!j.contains("noise")) throw config_error("config: missing 'noise'");
    return AnalyzeConfig{kernel_from_json(j["kernel"]), noise_from_json(j["noise"]),
                         detail::number_or(j, "jitter", 1e-10)};
}

// --- study configs -------------------------------------------------------------

/// Method parameter defaults follow the study protocols: the periodic CGPR
/// uses the 0.5 Hz periodic kernel with rho = 0.1 and a 0.3 s envelope, the
/// harmonic CGPR a 2 Hz kernel with a 0.2 s envelope, and the wavelet a 2 Hz
/// center with 0.2 s localization.
inline MethodSpec method_from_json(const json& j) {
    detail::reject_unknown_keys(j, {"name", "omega0", "rho", "mu", "lambda"}, "method");
    MethodSpec m;
    m.name = j.value("name", "");
    if (m.name == "cgpr-periodic") {
        m.omega0 = detail::number_or(j, "omega0", two_pi * 0.5);
        m.rho = detail::number_or(j, "rho", 0.1);
        m.mu = detail::number_or(j, "mu", 0.3);
        m.lambda = detail::number_or(j, "lambda", 1e-6);
    } else if (m.name == "cgpr-harmonic") {
        m.omega0 = detail::number_or(j, "omega0", two_pi * 2.0);
        m.mu = detail::number_or(j, "mu", 0.2);
        m.lambda = detail::number_or(j, "lambda", 0.8);
    } else if (m.name == "wavelet") {
        m.omega0 = detail::number_or(j, "omega0", two_pi * 2.0);
        m.mu = detail::number_or(j, "mu", 0.2);
    } else if (m.name == "analytic") {
        detail::reject_unknown_keys(j, {"name"}, "method.analytic");
    } else {
        throw config_error("method: unknown name '" + m.name +
                           "' (valid: cgpr-periodic, cgpr-harmonic, analytic, wavelet)");
    }
    return m;
}

inline StudyConfig study_from_json(const json& j) {
    detail::reject_unknown_keys(
        j, {"study", "n", "seed", "grid", "noise_sd", "methods", "trim_frac", "jobs"}, "study");
    StudyConfig c;
    const std::string kind = j.value("study", "");
    if (kind == "chirplet") {
        c.kind = StudyKind::chirplet;
    } else if (kind == "stoch" || kind == "stoch_osc") {
        c.kind = StudyKind::stoch_osc;
    } else {
        throw config_error("study: must be chirplet or stoch");
    }
    if (!j.contains("n")) throw config_error("study: missing 'n'");
    c.n_trials = j["n"].get<std::size_t>();
    c.seed = j.value("seed", std::uint64_t{0});
    if (j.contains("grid")) {
        const json& g = j["grid"];
        detail::reject_unknown_keys(g, {"t0", "dt", "n"}, "study.grid");
        c.grid.t0 = detail::number_or(g, "t0", 0.0);
        c.grid.dt = detail::number_or(g, "dt", 0.01);
        if (g.contains("n")) c.grid.n = g["n"].get<std::size_t>();
    }
    c.noise_sd = detail::number_or(j, "noise_sd", 0.0);
    c.trim_frac = detail::number_or(j, "trim_frac", 0.0);
    if (j.contains("jobs")) c.jobs = j["jobs"].get<int>();
    if (j.contains("methods")) {
        if (!j["methods"].is_array()) throw config_error("study.methods: expected an array");
        for (const auto& m : j["methods"]) c.methods.push_back(method_from_json(m));
    }
    return c;
}

inline json study_to_json(const StudyConfig& c) {
    json j;
    j["study"] = c.kind == StudyKind::chirplet ? "chirplet" : "stoch";
    j["n"] = c.n_trials;
    j["seed"] = c.seed;
    j["grid"] = {{"t0", c.grid.t0}, {"dt", c.grid.dt}, {"n", c.grid.n}};
    j["noise_sd"] = c.noise_sd;
    j["trim_frac"] = c.trim_frac;
    json methods = json::array();
    for (const MethodSpec& m : c.methods) {
        json jm{{"name", m.name}};
        if (m.name == "cgpr-periodic") {
            jm["omega0"] = m.omega0;
            jm["rho"] = m.rho;
            jm["mu"] = m.mu;
            jm["lambda"] = m.lambda;
        } else if (m.name == "cgpr-harmonic") {
            jm["omega0"] = m.omega0;
            jm["mu"] = m.mu;
            jm["lambda"] = m.lambda;
        } else if (m.name == "wavelet") {
            jm["omega0"] = m.omega0;
            jm["mu"] = m.mu;
        }
        methods.push_back(jm);
    }
    j["methods"] = methods;
    return j;
}

// FNV-1a, for the config hash echoed in reports (stable across platforms).
inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

inline json report_to_json(const StudyReport& report) {
    json j;
    const std::string config_dump = study_to_json(report.config).dump();
    j["config"] = study_to_json(report.config);
    j["config_hash"] = fnv1a(config_dump);
    j["seed"] = report.config.seed;
    json trials = json::array();
    for (const TrialResult& r : report.trials) {
        trials.push_back({{"trial", r.trial},
                          {"method", r.method},
                          {"mad_amplitude", r.mad_amplitude},
                          {"mad_frequency", r.mad_frequency},
                          {"initial_frequency", r.initial_frequency}});
    }
    j["trials"] = trials;
    json tests = json::array();
    for (const PairwiseTest& t : report.pairwise_tests) {
        tests.push_back({{"method_a", t.method_a},
                         {"method_b", t.method_b},
                         {"metric", t.metric},
                         {"statistic", t.statistic},
                         {"p_value", t.p_value}});
    }
    j["pairwise_tests"] = tests;
    json failures = json::array();
    for (const TrialFailure& f : report.failures) {
        failures.push_back({{"trial", f.trial}, {"message", f.message}});
    }
    j["failures"] = failures;
    return j;
}

} // namespace cgpr
