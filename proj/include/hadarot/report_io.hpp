#pragma once

// CSV / JSON emission for experiment reports. Every file carries the command,
// version, master seed and config hash; nothing time- or host-dependent is
// written, so identical configs produce identical bytes.

#include <fstream>
#include <iosfwd>
#include <string>
#include <vector>

#include "hadarot/experiments.hpp"

namespace hadarot::io {

/// "# hadarot <command> version=... seed=... config_hash=..."
std::string metadata_comment(const std::string& command, const experiments::ExperimentConfig& config);

/// Shortest round-trip decimal representation ("nan" for NaN).
std::string format_real(double v);

void write_marginal(const experiments::MarginalReport& report,
                    const experiments::ExperimentConfig& config, std::ostream& out);

/// CSV: `d,t,bound` rows. JSON: rows, per-d maxima and landmarks.
void write_lower_bound(const experiments::LowerBoundReport& report,
                       const experiments::ExperimentConfig& config, std::ostream& out);

/// CSV `d,t_star,max_bound,upper_e1` companion table for the lower-bound command.
void write_lower_bound_maxima(const experiments::LowerBoundReport& report,
                              const experiments::ExperimentConfig& config, std::ostream& out);

void write_e1(const experiments::E1Report& report, const experiments::ExperimentConfig& config,
              std::ostream& out);

struct VerifyMetadata {
    std::uint64_t master_seed;
    double sample_scale;
    std::string only;
};

void write_verify(const std::vector<lemmas::VerifierReport>& reports, const VerifyMetadata& meta,
                  std::ostream& out);

void write_bench(const experiments::BenchReport& report, std::ostream& out);

/// Writes via `emit` to `path`, or to stdout when path is empty.
/// Throws ConfigError when the file cannot be opened.
template <class Emit>
void emit_to(const std::string& path, Emit&& emit);

void open_or_throw(const std::string& path, std::ofstream& file);
std::ostream& stdout_stream();

template <class Emit>
void emit_to(const std::string& path, Emit&& emit) {
    if (path.empty()) {
        emit(stdout_stream());
        return;
    }
    std::ofstream file;
    open_or_throw(path, file);
    emit(static_cast<std::ostream&>(file));
}

}  // namespace hadarot::io
