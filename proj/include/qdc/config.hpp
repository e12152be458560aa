// config.hpp — Schema-validated run configuration: nested key-value document
// (JSON file), with named presets for the bundled figure reproductions.
// Unknown keys are errors.

#pragma once

#include <array>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qdc/bath.hpp"

namespace qdc::cli {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PulseConfig {
    double delta_t = 0.0;
    int n_cycles = 1;
};

struct SequenceConfig {
    std::string text;
    double base_dt = 1.0;
    std::string axes = "z";
};

struct ExactConfig {
    double omega0 = 1.0;
    std::vector<int> n_max;                 // one entry per mode
    std::string coupling = "dephasing";     // dephasing | jaynes_cummings | general
    std::array<std::vector<std::complex<double>>, 3> axis_g{};
};

struct OutputConfig {
    double t_max = 1.0;
    int n_samples = 101;
    std::string output;                     // empty: per-command default name
    std::string plot_script;                // optional gnuplot script path
    double tolerance = 1e-9;
};

struct SweepConfig {
    double t_end = 1.0;                     // fixed sequence end time
    double dt_min = 0.0;
    double dt_max = 0.0;
    int points = 9;
};

struct RunConfig {
    bath::BathSpec bath = bath::BathSpec::ohmic(0.25, 1.0, 0.0);
    std::optional<PulseConfig> pulse;
    std::optional<SequenceConfig> sequence;
    std::optional<ExactConfig> exact_model;
    std::optional<SweepConfig> sweep;
    OutputConfig run;
    int workers = 1;
};

// Parses and validates a JSON document; throws ConfigError on violations.
RunConfig parse_config_text(const std::string& json_text);
RunConfig load_config_file(const std::string& path);

// Built-in figure presets: fig1H, fig1L (free decay) and fig2 (pulsed).
// The presets pin alpha = 0.04; the figures fix only the shape of the
// spectral density, so the amplitude is a reproduction choice.
RunConfig preset(const std::string& name);
std::vector<std::string> preset_names();

}  // namespace qdc::cli
