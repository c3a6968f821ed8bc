#include "hadarot/report_io.hpp"

#include <cmath>
#include <fmt/format.h>
#include <iostream>
#include <json.hpp>

#include "hadarot/error.hpp"

namespace hadarot::io {

using experiments::Format;
using nlohmann::ordered_json;

namespace {

ordered_json real(double v) {
    if (std::isnan(v)) return nullptr;
    return v;
}

ordered_json metadata_json(const std::string& command, const experiments::ExperimentConfig& config) {
    return ordered_json{{"command", command},
                        {"version", HADAROT_VERSION},
                        {"master_seed", config.master_seed},
                        {"config_hash", config.hash(command)}};
}

void dump(const ordered_json& j, std::ostream& out) { out << j.dump(2) << '\n'; }

}  // namespace

std::string format_real(double v) {
    if (std::isnan(v)) return "nan";
    return fmt::format("{}", v);
}

std::string metadata_comment(const std::string& command, const experiments::ExperimentConfig& config) {
    return fmt::format("# hadarot {} version={} seed={} config_hash={}", command, HADAROT_VERSION,
                       config.master_seed, config.hash(command));
}

void write_marginal(const experiments::MarginalReport& report,
                    const experiments::ExperimentConfig& config, std::ostream& out) {
    if (config.format == Format::json) {
        ordered_json rows = ordered_json::array();
        for (const auto& r : report.rows) {
            rows.push_back({{"d", r.d},
                            {"ks_mean", r.ks_mean},
                            {"ks_se", r.ks_se},
                            {"ci_low", r.ci_low},
                            {"ci_high", r.ci_high},
                            {"n_inputs", r.n_inputs},
                            {"n_samples", r.n_samples},
                            {"c_pos_bound", r.c_pos_bound},
                            {"theory_curve", r.theory_curve}});
        }
        dump({{"metadata", metadata_json("experiment marginal", config)},
              {"c_scale", report.c_scale},
              {"se_defined", report.se_defined},
              {"rows", rows}},
             out);
        return;
    }
    out << metadata_comment("experiment marginal", config) << '\n';
    out << "# c_scale=" << format_real(report.c_scale)
        << " se_defined=" << (report.se_defined ? "true" : "false") << '\n';
    out << "d,ks_mean,ks_se,ci_low,ci_high,n_inputs,n_samples,c_pos_bound,theory_curve\n";
    for (const auto& r : report.rows) {
        out << fmt::format("{},{},{},{},{},{},{},{},{}\n", r.d, format_real(r.ks_mean),
                           format_real(r.ks_se), format_real(r.ci_low), format_real(r.ci_high),
                           r.n_inputs, r.n_samples, format_real(r.c_pos_bound),
                           format_real(r.theory_curve));
    }
}

void write_lower_bound(const experiments::LowerBoundReport& report,
                       const experiments::ExperimentConfig& config, std::ostream& out) {
    if (config.format == Format::json) {
        ordered_json rows = ordered_json::array();
        for (const auto& r : report.rows) rows.push_back({{"d", r.d}, {"t", r.t}, {"bound", r.bound}});
        ordered_json maxima = ordered_json::array();
        for (const auto& m : report.maxima) {
            maxima.push_back({{"d", m.d},
                              {"t_star", m.t_star},
                              {"max_bound", m.max_bound},
                              {"upper_e1", m.upper_e1}});
        }
        ordered_json landmarks = ordered_json::array();
        for (const auto& l : report.landmarks) {
            landmarks.push_back({{"name", l.name},
                                 {"d", l.d},
                                 {"t", real(l.t)},
                                 {"value", l.value},
                                 {"expected", l.expected},
                                 {"tolerance", l.tolerance},
                                 {"pass", l.pass}});
        }
        dump({{"metadata", metadata_json("experiment lower-bound", config)},
              {"rows", rows},
              {"maxima", maxima},
              {"landmarks", landmarks}},
             out);
        return;
    }
    out << metadata_comment("experiment lower-bound", config) << '\n';
    out << "d,t,bound\n";
    for (const auto& r : report.rows) {
        out << r.d << ',' << format_real(r.t) << ',' << format_real(r.bound) << '\n';
    }
}

void write_lower_bound_maxima(const experiments::LowerBoundReport& report,
                              const experiments::ExperimentConfig& config, std::ostream& out) {
    out << metadata_comment("experiment lower-bound", config) << '\n';
    out << "d,t_star,max_bound,upper_e1\n";
    for (const auto& m : report.maxima) {
        out << fmt::format("{},{},{},{}\n", m.d, format_real(m.t_star), format_real(m.max_bound),
                           format_real(m.upper_e1));
    }
}

void write_e1(const experiments::E1Report& report, const experiments::ExperimentConfig& config,
              std::ostream& out) {
    if (config.format == Format::json) {
        ordered_json rows = ordered_json::array();
        for (const auto& r : report.rows) {
            rows.push_back({{"d", r.d},
                            {"estimate", r.estimate},
                            {"se", r.se},
                            {"lower_max_t", r.lower_max_t},
                            {"upper_closed_form", r.upper_closed_form},
                            {"sandwich_checked", r.sandwich_checked},
                            {"sandwich_ok", r.sandwich_ok}});
        }
        dump({{"metadata", metadata_json("experiment e1", config)},
              {"n_samples", report.n_samples},
              {"rows", rows}},
             out);
        return;
    }
    out << metadata_comment("experiment e1", config) << '\n';
    out << "d,estimate,se,lower_max_t,upper_closed_form\n";
    for (const auto& r : report.rows) {
        out << fmt::format("{},{},{},{},{}\n", r.d, format_real(r.estimate), format_real(r.se),
                           format_real(r.lower_max_t), format_real(r.upper_closed_form));
    }
}

void write_verify(const std::vector<lemmas::VerifierReport>& reports, const VerifyMetadata& meta,
                  std::ostream& out) {
    ordered_json list = ordered_json::array();
    bool all = true;
    for (const auto& r : reports) {
        ordered_json details = ordered_json::object();
        for (const auto& [k, v] : r.details) details[k] = real(v);
        list.push_back({{"verifier", r.verifier},
                        {"instances", r.instances},
                        {"violations", r.violations},
                        {"min_slack", real(r.min_slack)},
                        {"pass", r.pass},
                        {"statistical", r.statistical},
                        {"grid_hash", r.grid_hash},
                        {"details", details}});
        all = all && r.pass;
    }
    dump({{"metadata",
           {{"command", "verify"},
            {"version", HADAROT_VERSION},
            {"master_seed", meta.master_seed},
            {"sample_scale", meta.sample_scale},
            {"only", meta.only}}},
          {"pass", all},
          {"verifiers", list}},
         out);
}

void write_bench(const experiments::BenchReport& report, std::ostream& out) {
    out << "d,fwht_median_ns,naive_median_ns,speedup\n";
    for (const auto& r : report.rows) {
        out << fmt::format("{},{:.1f},{},{}\n", r.d, r.fwht_median_ns,
                           std::isnan(r.naive_median_ns) ? "nan" : fmt::format("{:.1f}", r.naive_median_ns),
                           std::isnan(r.speedup) ? "nan" : fmt::format("{:.2f}", r.speedup));
    }
    out << "# scaling_exponent=" << format_real(report.scaling_exponent)
        << (report.exponent_checked ? (report.exponent_ok ? " (ok)" : " (FAIL: outside [0.9, 1.4])") : " (not checked)")
        << '\n';
    if (report.speedup_checked) {
        out << "# speedup@4096 " << (report.speedup_ok ? "ok" : "FAIL: below 10x") << '\n';
    }
}

void open_or_throw(const std::string& path, std::ofstream& file) {
    file.open(path, std::ios::binary | std::ios::trunc);
    if (!file) throw ConfigError("cannot open output file: " + path);
}

std::ostream& stdout_stream() { return std::cout; }

}  // namespace hadarot::io
