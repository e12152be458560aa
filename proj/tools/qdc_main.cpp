// qdc — decoherence-control toolkit CLI: figure reproductions, sequence
// verification, analytic-vs-exact comparison, and suppression sweeps.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qdc/commands.hpp"
#include "qdc/config.hpp"

namespace {

using qdc::cli::RunConfig;

struct CommonOpts {
    std::string config_path;
    std::string preset;
    std::optional<double> alpha, omega_c, temperature;
    std::optional<double> t_max, delta_t;
    std::optional<int> samples, cycles;
    std::string output, plot_script;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_bath = true) {
    cmd->add_option("--config", o.config_path, "JSON config file");
    cmd->add_option("--preset", o.preset, "built-in preset: fig1H, fig1L, fig2");
    cmd->add_option("--output", o.output, "output CSV path");
    cmd->add_option("--plot", o.plot_script, "emit a gnuplot script to this path");
    if (with_bath) {
        o.alpha.reset();
        cmd->add_option("--alpha", [&o](auto& v) { o.alpha = std::stod(v[0]); return true; },
                        "Ohmic coupling strength")->expected(1);
        cmd->add_option("--omega-c", [&o](auto& v) { o.omega_c = std::stod(v[0]); return true; },
                        "Ohmic cutoff frequency")->expected(1);
        cmd->add_option("--temperature", [&o](auto& v) { o.temperature = std::stod(v[0]); return true; },
                        "bath temperature")->expected(1);
    }
}

RunConfig materialize(const CommonOpts& o) {
    RunConfig cfg;
    if (!o.preset.empty() && !o.config_path.empty())
        throw qdc::cli::ConfigError("give either --preset or --config, not both");
    if (!o.preset.empty()) cfg = qdc::cli::preset(o.preset);
    else if (!o.config_path.empty()) cfg = qdc::cli::load_config_file(o.config_path);

    if (o.alpha || o.omega_c || o.temperature) {
        if (!cfg.bath.is_continuum())
            throw qdc::cli::ConfigError("bath flags only apply to Ohmic baths");
        auto c = cfg.bath.continuum();
        cfg.bath = qdc::bath::BathSpec::ohmic(o.alpha.value_or(c.alpha),
                                              o.omega_c.value_or(c.omega_c),
                                              o.temperature.value_or(cfg.bath.temperature));
    }
    if (o.t_max) cfg.run.t_max = *o.t_max;
    if (o.samples) cfg.run.n_samples = *o.samples;
    if (!o.output.empty()) cfg.run.output = o.output;
    if (!o.plot_script.empty()) cfg.run.plot_script = o.plot_script;
    if (o.delta_t) {
        if (!cfg.pulse) cfg.pulse = qdc::cli::PulseConfig{};
        cfg.pulse->delta_t = *o.delta_t;
        if (cfg.pulse->n_cycles < 1) cfg.pulse->n_cycles = 1;
    }
    if (o.cycles) {
        if (!cfg.pulse) cfg.pulse = qdc::cli::PulseConfig{};
        cfg.pulse->n_cycles = *o.cycles;
    }
    if (const char* env = std::getenv("QDC_WORKERS")) {
        const int w = std::atoi(env);
        if (w >= 1) cfg.workers = w;
    }
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qdc — open-loop decoherence control toolkit for a dephasing qubit"};
    app.require_subcommand(1);

    CommonOpts free_opts;
    auto* free_cmd = app.add_subcommand("free-decay", "free dephasing coherence curve -> CSV");
    add_common(free_cmd, free_opts);
    free_cmd->add_option("--t-max", [&free_opts](auto& v) { free_opts.t_max = std::stod(v[0]); return true; },
                         "curve horizon")->expected(1);
    free_cmd->add_option("--samples", [&free_opts](auto& v) { free_opts.samples = std::stoi(v[0]); return true; },
                         "number of samples")->expected(1);

    CommonOpts pulsed_opts;
    auto* pulsed_cmd = app.add_subcommand("pulsed", "stroboscopic pulsed coherence series -> CSV");
    add_common(pulsed_cmd, pulsed_opts);
    pulsed_cmd->add_option("--delta-t", [&pulsed_opts](auto& v) { pulsed_opts.delta_t = std::stod(v[0]); return true; },
                           "pulse separation")->expected(1);
    pulsed_cmd->add_option("--cycles", [&pulsed_opts](auto& v) { pulsed_opts.cycles = std::stoi(v[0]); return true; },
                           "number of cycles")->expected(1);

    std::string seq_text, seq_axes = "z";
    auto* verify_cmd = app.add_subcommand("verify-seq", "zeroth-order decoupling check of a sequence");
    verify_cmd->add_option("--sequence", seq_text, "sequence text, e.g. 'd:1/2,p:x,d:1,p:x,d:1/2'")
        ->required();
    verify_cmd->add_option("--axes", seq_axes, "coupling axes to test, e.g. z or xyz");

    CommonOpts compare_opts;
    auto* compare_cmd = app.add_subcommand("exact-compare", "analytic vs exact-engine agreement report");
    add_common(compare_cmd, compare_opts);
    compare_cmd->add_option("--t-max", [&compare_opts](auto& v) { compare_opts.t_max = std::stod(v[0]); return true; },
                            "free-decay comparison horizon (custom case)")->expected(1);

    CommonOpts sweep_opts;
    std::optional<double> sweep_t_end, sweep_dt_min, sweep_dt_max;
    std::optional<int> sweep_points;
    auto* sweep_cmd = app.add_subcommand("sweep", "suppression ratio vs pulse separation -> CSV");
    add_common(sweep_cmd, sweep_opts);
    sweep_cmd->add_option("--t-end", [&sweep_t_end](auto& v) { sweep_t_end = std::stod(v[0]); return true; },
                          "fixed sequence end time")->expected(1);
    sweep_cmd->add_option("--dt-min", [&sweep_dt_min](auto& v) { sweep_dt_min = std::stod(v[0]); return true; },
                          "smallest pulse separation")->expected(1);
    sweep_cmd->add_option("--dt-max", [&sweep_dt_max](auto& v) { sweep_dt_max = std::stod(v[0]); return true; },
                          "largest pulse separation")->expected(1);
    sweep_cmd->add_option("--points", [&sweep_points](auto& v) { sweep_points = std::stoi(v[0]); return true; },
                          "sweep points")->expected(1);

    CommonOpts echo_opts;
    double echo_t = 0.0;
    auto* echo_cmd = app.add_subcommand("echo", "coherence-echo gain at one target time");
    add_common(echo_cmd, echo_opts);
    echo_cmd->add_option("--t", echo_t, "target time (an integer number of cycles)")->required();
    echo_cmd->add_option("--delta-t", [&echo_opts](auto& v) { echo_opts.delta_t = std::stod(v[0]); return true; },
                         "pulse separation")->expected(1);

    CLI11_PARSE(app, argc, argv);

    auto run = [&]() -> int {
        if (free_cmd->parsed()) return qdc::cli::cmd_free_decay(materialize(free_opts), std::cout);
        if (pulsed_cmd->parsed()) return qdc::cli::cmd_pulsed(materialize(pulsed_opts), std::cout);
        if (verify_cmd->parsed()) return qdc::cli::cmd_verify_seq(seq_text, seq_axes, std::cout);
        if (compare_cmd->parsed()) return qdc::cli::cmd_exact_compare(materialize(compare_opts), std::cout);
        if (sweep_cmd->parsed()) {
            RunConfig cfg = materialize(sweep_opts);
            if (sweep_t_end || sweep_dt_min || sweep_dt_max || sweep_points) {
                qdc::cli::SweepConfig sw = cfg.sweep.value_or(qdc::cli::SweepConfig{});
                if (sweep_t_end) sw.t_end = *sweep_t_end;
                if (sweep_dt_min) sw.dt_min = *sweep_dt_min;
                if (sweep_dt_max) sw.dt_max = *sweep_dt_max;
                if (sweep_points) sw.points = *sweep_points;
                cfg.sweep = sw;
            }
            return qdc::cli::cmd_sweep(cfg, std::cout);
        }
        if (echo_cmd->parsed()) return qdc::cli::cmd_echo(materialize(echo_opts), echo_t, std::cout);
        return qdc::cli::kConfigErrorCode;
    };
    return qdc::cli::run_guarded(run, std::cerr);
}
