// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 CGPR Project Contributors

#pragma once

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cgpr/bench.hpp"
#include "cgpr/core.hpp"
#include "cgpr/signals.hpp"
#include "cgpr/simulate.hpp"
#include "cgpr/spectral.hpp"

namespace cgpr {

/// Parse error carrying the 1-based line number of the offending row.
class CsvError : public std::runtime_error {
public:
    CsvError(const std::string& msg, std::size_t line)
        : std::runtime_error(msg + " (line " + std::to_string(line) + ")"), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

namespace detail {

inline double parse_field(const std::string& field, std::size_t line) {
    double v = 0.0;
    const char* begin = field.data();
    const char* end = begin + field.size();
    while (begin < end && (*begin == ' ' || *begin == '\t')) ++begin;
    const auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc{} || ptr != end) {
        throw CsvError("malformed numeric field '" + field + "'", line);
    }
    return v;
}

inline std::vector<std::string> split_row(const std::string& row) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : row) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

inline std::vector<std::vector<double>> read_table(const std::string& path,
                                                   const std::string& expected_header) {
    std::ifstream in(path);
    if (!in) throw CsvError("cannot open '" + path + "'", 0);
    std::string row;
    std::size_t line = 0;
    if (!std::getline(in, row)) throw CsvError("empty file '" + path + "'", 0);
    ++line;
    if (!row.empty() && row.back() == '\r') row.pop_back();
    if (row != expected_header) {
        throw CsvError("expected header '" + expected_header + "', got '" + row + "'", line);
    }
    const std::size_t ncols = split_row(expected_header).size();
    std::vector<std::vector<double>> table;
    while (std::getline(in, row)) {
        ++line;
        if (row.empty() || row == "\r") continue;
        const std::vector<std::string> fields = split_row(row);
        if (fields.size() != ncols) {
            throw CsvError("expected " + std::to_string(ncols) + " fields, got " +
                               std::to_string(fields.size()),
                           line);
        }
        std::vector<double> vals(ncols);
        for (std::size_t c = 0; c < ncols; ++c) vals[c] = parse_field(fields[c], line);
        table.push_back(std::move(vals));
    }
    return table;
}

// Shortest round-trip formatting: %.17g is lossless for doubles and
// locale-independent under the default "C" locale.
inline std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace detail

inline SampledSignal read_signal_csv(const std::string& path) {
    const auto table = detail::read_table(path, "t,value");
    std::vector<double> t, v;
    for (const auto& row : table) {
        t.push_back(row[0]);
        v.push_back(row[1]);
    }
    return SampledSignal(TimeGrid(std::move(t)), std::move(v));
}

inline ComplexSeries read_complex_csv(const std::string& path) {
    const auto table = detail::read_table(path, "t,re,im");
    std::vector<double> t;
    std::vector<cdouble> v;
    for (const auto& row : table) {
        t.push_back(row[0]);
        v.emplace_back(row[1], row[2]);
    }
    return ComplexSeries(TimeGrid(std::move(t)), std::move(v));
}

inline void write_signal_csv(const std::string& path, const SampledSignal& s) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << "t,value\n";
    for (std::size_t j = 0; j < s.size(); ++j) {
        out << detail::fmt(s.grid[j]) << ',' << detail::fmt(s.values[j]) << '\n';
    }
}

inline void write_complex_csv(const std::string& path, const ComplexSeries& z) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << "t,re,im\n";
    for (std::size_t j = 0; j < z.size(); ++j) {
        out << detail::fmt(z.grid[j]) << ',' << detail::fmt(z.values[j].real()) << ','
            << detail::fmt(z.values[j].imag()) << '\n';
    }
}

/// Analysis output: complex signal plus its instantaneous attributes.
inline void write_analysis_csv(const std::string& path, const ComplexSeries& z,
                               const InstAttrs& attrs) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << "t,re,im,amplitude,phase,frequency\n";
    for (std::size_t j = 0; j < z.size(); ++j) {
        out << detail::fmt(z.grid[j]) << ',' << detail::fmt(z.values[j].real()) << ','
            << detail::fmt(z.values[j].imag()) << ',' << detail::fmt(attrs.amplitude[j]) << ','
            << detail::fmt(attrs.phase_unwrapped[j]) << ',' << detail::fmt(attrs.frequency[j])
            << '\n';
    }
}

inline void write_ground_truth_csv(const std::string& path, const GroundTruth& gt) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << "t,signal,amp,phase,freq\n";
    for (std::size_t j = 0; j < gt.signal.size(); ++j) {
        out << detail::fmt(gt.signal.grid[j]) << ',' << detail::fmt(gt.signal.values[j]) << ','
            << detail::fmt(gt.amplitude[j]) << ',' << detail::fmt(gt.phase[j]) << ','
            << detail::fmt(gt.frequency[j]) << '\n';
    }
}

inline void write_diagnostics_csv(const std::string& path, const SpectralDiagnostics& d) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << "xi,lambda1,lambda2,coh_re,coh_im,chi\n";
    for (std::size_t j = 0; j < d.xi.size(); ++j) {
        out << detail::fmt(d.xi[j]) << ',' << detail::fmt(d.lambda1[j]) << ','
            << detail::fmt(d.lambda2[j]) << ',' << detail::fmt(d.coherency[j].real()) << ','
            << detail::fmt(d.coherency[j].imag()) << ',' << detail::fmt(d.cond_variance[j]) << '\n';
    }
}

inline void write_results_csv(const std::string& path, const StudyReport& report) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << "trial,method,mad_amp,mad_freq\n";
    for (const TrialResult& r : report.trials) {
        out << r.trial << ',' << r.method << ',' << detail::fmt(r.mad_amplitude) << ','
            << detail::fmt(r.mad_frequency) << '\n';
    }
}

/// Per-method medians binned by the trial's initial frequency (Hz bins).
inline void write_binned_csv(const std::string& path, const StudyReport& report,
                             std::size_t n_bins = 6) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << "metric,method,bin_lo_hz,bin_hi_hz,count,median_mad\n";
    if (report.trials.empty()) return;
    double lo = INFINITY, hi = -INFINITY;
    for (const TrialResult& r : report.trials) {
        lo = std::min(lo, r.initial_frequency);
        hi = std::max(hi, r.initial_frequency);
    }
    lo /= two_pi;
    hi /= two_pi;
    if (!(hi > lo)) hi = lo + 1.0;
    const double width = (hi - lo) / static_cast<double>(n_bins);
    for (const char* metric : {"amplitude", "frequency"}) {
        const bool amp = std::string(metric) == "amplitude";
        for (const MethodSpec& m : report.config.methods) {
            for (std::size_t b = 0; b < n_bins; ++b) {
                const double blo = lo + width * static_cast<double>(b);
                const double bhi = b + 1 == n_bins ? hi : blo + width;
                std::vector<double> vals;
                for (const TrialResult& r : report.trials) {
                    if (r.method != m.name) continue;
                    const double f = r.initial_frequency / two_pi;
                    const bool in = b + 1 == n_bins ? (f >= blo && f <= bhi) : (f >= blo && f < bhi);
                    if (in) vals.push_back(amp ? r.mad_amplitude : r.mad_frequency);
                }
                if (vals.empty()) continue;
                out << metric << ',' << m.name << ',' << detail::fmt(blo) << ',' << detail::fmt(bhi)
                    << ',' << vals.size() << ',' << detail::fmt(median(vals)) << '\n';
            }
        }
    }
}

} // namespace cgpr
