#include "qdc/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace qdc::cli {

namespace {

using nlohmann::json;

void check_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
    if (!obj.is_object()) throw ConfigError("config: " + where + " must be an object");
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!allowed.count(it.key()))
            throw ConfigError("config: unknown key '" + it.key() + "' in " + where);
}

double require_number(const json& obj, const std::string& key, const std::string& where) {
    if (!obj.contains(key)) throw ConfigError("config: missing key '" + key + "' in " + where);
    if (!obj[key].is_number()) throw ConfigError("config: '" + key + "' in " + where + " must be a number");
    return obj[key].get<double>();
}

double number_or(const json& obj, const std::string& key, double fallback, const std::string& where) {
    if (!obj.contains(key)) return fallback;
    if (!obj[key].is_number()) throw ConfigError("config: '" + key + "' in " + where + " must be a number");
    return obj[key].get<double>();
}

int int_or(const json& obj, const std::string& key, int fallback, const std::string& where) {
    if (!obj.contains(key)) return fallback;
    if (!obj[key].is_number_integer()) throw ConfigError("config: '" + key + "' in " + where + " must be an integer");
    return obj[key].get<int>();
}

std::string string_or(const json& obj, const std::string& key, const std::string& fallback,
                      const std::string& where) {
    if (!obj.contains(key)) return fallback;
    if (!obj[key].is_string()) throw ConfigError("config: '" + key + "' in " + where + " must be a string");
    return obj[key].get<std::string>();
}

std::complex<double> parse_amplitude(const json& v, const std::string& where) {
    if (v.is_number()) return {v.get<double>(), 0.0};
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
        return {v[0].get<double>(), v[1].get<double>()};
    throw ConfigError("config: coupling amplitude in " + where + " must be a number or [re, im]");
}

bath::BathSpec parse_bath(const json& obj) {
    check_keys(obj, {"type", "alpha", "omega_c", "modes", "temperature"}, "bath");
    const std::string type = string_or(obj, "type", "ohmic", "bath");
    const double temperature = number_or(obj, "temperature", 0.0, "bath");
    try {
        if (type == "ohmic") {
            if (obj.contains("modes")) throw ConfigError("config: 'modes' is only valid for bath.type = discrete");
            return bath::BathSpec::ohmic(number_or(obj, "alpha", 0.25, "bath"),
                                         require_number(obj, "omega_c", "bath"), temperature);
        }
        if (type == "discrete") {
            if (obj.contains("alpha") || obj.contains("omega_c"))
                throw ConfigError("config: 'alpha'/'omega_c' are only valid for bath.type = ohmic");
            if (!obj.contains("modes") || !obj["modes"].is_array() || obj["modes"].empty())
                throw ConfigError("config: bath.type = discrete requires a non-empty 'modes' array");
            std::vector<bath::Mode> modes;
            for (const auto& m : obj["modes"]) {
                check_keys(m, {"omega", "g"}, "bath.modes[]");
                if (!m.contains("g")) throw ConfigError("config: missing key 'g' in bath.modes[]");
                modes.emplace_back(require_number(m, "omega", "bath.modes[]"),
                                   parse_amplitude(m["g"], "bath.modes[]"));
            }
            return bath::BathSpec::discrete(std::move(modes), temperature);
        }
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    throw ConfigError("config: bath.type must be 'ohmic' or 'discrete'");
}

PulseConfig parse_pulse(const json& obj) {
    check_keys(obj, {"delta_t", "n_cycles"}, "pulse");
    PulseConfig p;
    p.delta_t = require_number(obj, "delta_t", "pulse");
    p.n_cycles = int_or(obj, "n_cycles", 1, "pulse");
    if (!(p.delta_t > 0.0)) throw ConfigError("config: pulse.delta_t must be > 0");
    if (p.n_cycles < 1) throw ConfigError("config: pulse.n_cycles must be >= 1");
    return p;
}

SequenceConfig parse_sequence_cfg(const json& obj) {
    check_keys(obj, {"text", "base_dt", "axes"}, "sequence");
    SequenceConfig s;
    s.text = string_or(obj, "text", "", "sequence");
    if (s.text.empty()) throw ConfigError("config: sequence.text is required");
    s.base_dt = number_or(obj, "base_dt", 1.0, "sequence");
    s.axes = string_or(obj, "axes", "z", "sequence");
    if (!(s.base_dt > 0.0)) throw ConfigError("config: sequence.base_dt must be > 0");
    return s;
}

ExactConfig parse_exact(const json& obj) {
    check_keys(obj, {"omega0", "n_max", "coupling", "axis_g"}, "exact");
    ExactConfig e;
    e.omega0 = number_or(obj, "omega0", 1.0, "exact");
    if (obj.contains("n_max")) {
        if (obj["n_max"].is_number_integer()) {
            e.n_max = {obj["n_max"].get<int>()};
        } else if (obj["n_max"].is_array()) {
            for (const auto& v : obj["n_max"]) {
                if (!v.is_number_integer()) throw ConfigError("config: exact.n_max entries must be integers");
                e.n_max.push_back(v.get<int>());
            }
        } else {
            throw ConfigError("config: exact.n_max must be an integer or an array of integers");
        }
    }
    e.coupling = string_or(obj, "coupling", "dephasing", "exact");
    if (e.coupling != "dephasing" && e.coupling != "jaynes_cummings" && e.coupling != "general")
        throw ConfigError("config: exact.coupling must be dephasing, jaynes_cummings or general");
    if (obj.contains("axis_g")) {
        check_keys(obj["axis_g"], {"x", "y", "z"}, "exact.axis_g");
        const char* names[3] = {"x", "y", "z"};
        for (int a = 0; a < 3; ++a) {
            if (!obj["axis_g"].contains(names[a])) continue;
            if (!obj["axis_g"][names[a]].is_array())
                throw ConfigError("config: exact.axis_g entries must be arrays");
            for (const auto& v : obj["axis_g"][names[a]])
                e.axis_g[a].push_back(parse_amplitude(v, "exact.axis_g"));
        }
    }
    return e;
}

SweepConfig parse_sweep(const json& obj) {
    check_keys(obj, {"t_end", "dt_min", "dt_max", "points"}, "sweep");
    SweepConfig s;
    s.t_end = require_number(obj, "t_end", "sweep");
    s.dt_min = require_number(obj, "dt_min", "sweep");
    s.dt_max = require_number(obj, "dt_max", "sweep");
    s.points = int_or(obj, "points", 9, "sweep");
    if (!(s.t_end > 0.0) || !(s.dt_min > 0.0) || !(s.dt_max > s.dt_min))
        throw ConfigError("config: sweep requires t_end > 0 and 0 < dt_min < dt_max");
    if (s.points < 2) throw ConfigError("config: sweep.points must be >= 2");
    return s;
}

OutputConfig parse_run(const json& obj) {
    check_keys(obj, {"t_max", "n_samples", "output", "plot_script", "tolerance"}, "run");
    OutputConfig r;
    r.t_max = number_or(obj, "t_max", 1.0, "run");
    r.n_samples = int_or(obj, "n_samples", 101, "run");
    r.output = string_or(obj, "output", "", "run");
    r.plot_script = string_or(obj, "plot_script", "", "run");
    r.tolerance = number_or(obj, "tolerance", 1e-9, "run");
    return r;
}

RunConfig parse_document(const json& doc) {
    if (!doc.is_object()) throw ConfigError("config: top level must be an object");
    check_keys(doc, {"bath", "pulse", "sequence", "exact", "sweep", "run", "workers"}, "top level");
    RunConfig cfg;
    if (doc.contains("bath")) cfg.bath = parse_bath(doc["bath"]);
    if (doc.contains("pulse")) cfg.pulse = parse_pulse(doc["pulse"]);
    if (doc.contains("sequence")) cfg.sequence = parse_sequence_cfg(doc["sequence"]);
    if (doc.contains("exact")) cfg.exact_model = parse_exact(doc["exact"]);
    if (doc.contains("sweep")) cfg.sweep = parse_sweep(doc["sweep"]);
    if (doc.contains("run")) cfg.run = parse_run(doc["run"]);
    cfg.workers = int_or(doc, "workers", 1, "top level");
    if (cfg.workers < 1) throw ConfigError("config: workers must be >= 1");
    return cfg;
}

}  // namespace

RunConfig parse_config_text(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config: invalid JSON: ") + e.what());
    }
    return parse_document(doc);
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

// Figure presets. The high-temperature bath has omega_c / T = 1e-2, the
// low-temperature one omega_c / T = 1e2; both use omega_c = 100 so the bath
// correlation time is 0.01. Each horizon spans the visible decay in units of
// 1/T for its own temperature.
RunConfig preset(const std::string& name) {
    if (name == "fig1H") {
        return parse_config_text(R"({
            "bath": {"type": "ohmic", "alpha": 0.04, "omega_c": 100.0, "temperature": 1.0e4},
            "run": {"t_max": 0.01, "n_samples": 201, "output": "fig1H.csv"}
        })");
    }
    if (name == "fig1L") {
        return parse_config_text(R"({
            "bath": {"type": "ohmic", "alpha": 0.04, "omega_c": 100.0, "temperature": 1.0},
            "run": {"t_max": 10.0, "n_samples": 201, "output": "fig1L.csv"}
        })");
    }
    if (name == "fig2") {
        return parse_config_text(R"({
            "bath": {"type": "ohmic", "alpha": 0.04, "omega_c": 100.0, "temperature": 1.0e4},
            "pulse": {"delta_t": 0.001, "n_cycles": 25},
            "run": {"output": "fig2.csv"}
        })");
    }
    throw ConfigError("config: unknown preset '" + name + "' (available: fig1H, fig1L, fig2)");
}

std::vector<std::string> preset_names() { return {"fig1H", "fig1L", "fig2"}; }

}  // namespace qdc::cli
