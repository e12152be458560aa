#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "qdc/commands.hpp"
#include "qdc/config.hpp"
#include "qdc/csv.hpp"

using namespace qdc;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("qdc_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { std::error_code ec; fs::remove_all(path, ec); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int count_lines(const std::string& text) {
    int n = 0;
    for (char c : text)
        if (c == '\n') ++n;
    return n;
}

}  // namespace

TEST_CASE("config schema validation") {
    CHECK_THROWS_AS(cli::parse_config_text("not json"), cli::ConfigError);
    CHECK_THROWS_AS(cli::parse_config_text(R"({"bogus": 1})"), cli::ConfigError);
    CHECK_THROWS_AS(cli::parse_config_text(R"({"bath": {"type": "ohmic", "omega_c": 1, "snake": 2}})"),
                    cli::ConfigError);
    CHECK_THROWS_AS(cli::parse_config_text(R"({"bath": {"type": "ohmic"}})"), cli::ConfigError);
    CHECK_THROWS_AS(cli::parse_config_text(R"({"bath": {"type": "discrete", "modes": []}})"),
                    cli::ConfigError);
    CHECK_THROWS_AS(
        cli::parse_config_text(R"({"bath": {"type": "discrete", "alpha": 1, "modes": [{"omega": 1, "g": 1}]}})"),
        cli::ConfigError);
    CHECK_THROWS_AS(cli::parse_config_text(R"({"pulse": {"delta_t": -1}})"), cli::ConfigError);
    CHECK_THROWS_AS(cli::parse_config_text(R"({"bath": {"type": "ohmic", "omega_c": 1, "alpha": -2}})"),
                    cli::ConfigError);

    auto cfg = cli::parse_config_text(R"({
        "bath": {"type": "discrete", "temperature": 0.5,
                 "modes": [{"omega": 1.0, "g": 0.5}, {"omega": 2.0, "g": [0.1, -0.2]}]},
        "pulse": {"delta_t": 0.25, "n_cycles": 4},
        "run": {"t_max": 3.0, "n_samples": 11, "output": "x.csv"}
    })");
    CHECK_FALSE(cfg.bath.is_continuum());
    CHECK(cfg.bath.discrete_modes().modes.size() == 2);
    CHECK(cfg.bath.discrete_modes().modes[1].g == std::complex<double>(0.1, -0.2));
    CHECK(cfg.pulse->n_cycles == 4);
    CHECK(cfg.run.n_samples == 11);
}

TEST_CASE("presets") {
    for (const auto& name : cli::preset_names()) CHECK_NOTHROW(cli::preset(name));
    CHECK_THROWS_AS(cli::preset("fig9"), cli::ConfigError);
    auto fig2 = cli::preset("fig2");
    REQUIRE(fig2.pulse.has_value());
    CHECK(fig2.pulse->delta_t == doctest::Approx(1e-3));   // tau_c / 10 for omega_c = 100
    CHECK(fig2.bath.continuum().omega_c == doctest::Approx(100.0));
    CHECK(fig2.bath.temperature == doctest::Approx(1e4));
}

TEST_CASE("free-decay command writes the stable CSV schema") {
    TempDir tmp;
    auto cfg = cli::preset("fig1H");
    cfg.run.output = tmp.file("h.csv");
    cfg.run.n_samples = 41;
    cfg.run.t_max = 0.004;
    std::ostringstream log;
    CHECK(cli::cmd_free_decay(cfg, log) == cli::kOk);

    const std::string text = slurp(cfg.run.output);
    CHECK(text.rfind("t,gamma,coherence\n", 0) == 0);
    CHECK(count_lines(text) == 42);
    CHECK(text.find("\r") == std::string::npos);
    CHECK(text.find("0,0,1\n") != std::string::npos);

    // deterministic: identical bytes on a second run
    cfg.run.output = tmp.file("h2.csv");
    std::ostringstream log2;
    cli::cmd_free_decay(cfg, log2);
    CHECK(slurp(tmp.file("h.csv")) == slurp(tmp.file("h2.csv")));

    // coherence column decreases monotonically for the hot preset
    std::istringstream rows(text);
    std::string line;
    std::getline(rows, line);
    double prev = 2.0;
    bool monotone = true;
    while (std::getline(rows, line)) {
        const auto last_comma = line.rfind(',');
        const double coherence = std::stod(line.substr(last_comma + 1));
        monotone = monotone && coherence < prev + 1e-15;
        prev = coherence;
    }
    CHECK(monotone);
}

TEST_CASE("free-decay rejects a degenerate horizon") {
    TempDir tmp;
    auto cfg = cli::preset("fig1H");
    cfg.run.t_max = 0.0;
    cfg.run.output = tmp.file("bad.csv");
    std::ostringstream log;
    const int code = cli::run_guarded([&] { return cli::cmd_free_decay(cfg, log); }, log);
    CHECK(code == cli::kConfigErrorCode);
}

TEST_CASE("free-decay shows the single-mode revival") {
    TempDir tmp;
    auto cfg = cli::parse_config_text(R"({
        "bath": {"type": "discrete", "temperature": 0.0, "modes": [{"omega": 2.0, "g": 0.6}]},
        "run": {"n_samples": 33}
    })");
    cfg.run.t_max = 3.14159265358979312;   // one mode period 2 pi / omega
    cfg.run.output = tmp.file("revival.csv");
    std::ostringstream log;
    CHECK(cli::cmd_free_decay(cfg, log) == cli::kOk);
    const std::string text = slurp(cfg.run.output);
    std::istringstream rows(text);
    std::string line;
    std::getline(rows, line);
    double final_coherence = 0.0, min_coherence = 2.0;
    while (std::getline(rows, line)) {
        const double c = std::stod(line.substr(line.rfind(',') + 1));
        final_coherence = c;
        min_coherence = std::min(min_coherence, c);
    }
    CHECK(min_coherence < 0.9);
    CHECK(final_coherence > 0.999);
}

TEST_CASE("pulsed command") {
    TempDir tmp;
    auto cfg = cli::preset("fig2");
    cfg.pulse->n_cycles = 8;
    cfg.run.output = tmp.file("p.csv");
    std::ostringstream log;
    CHECK(cli::cmd_pulsed(cfg, log) == cli::kOk);
    const std::string text = slurp(cfg.run.output);
    CHECK(text.rfind("N,t,gamma,coherence\n", 0) == 0);
    CHECK(count_lines(text) == 10);   // header + anchor + 8 cycles

    // delta_t <= 0 is a config error
    cfg.pulse->delta_t = 0.0;
    const int code = cli::run_guarded([&] { return cli::cmd_pulsed(cfg, log); }, log);
    CHECK(code == cli::kConfigErrorCode);
}

TEST_CASE("pulsed preset keeps coherence inside (0.9, 1] over its horizon") {
    TempDir tmp;
    auto cfg = cli::preset("fig2");
    cfg.run.output = tmp.file("fig2.csv");
    std::ostringstream log;
    CHECK(cli::cmd_pulsed(cfg, log) == cli::kOk);
    std::istringstream rows(slurp(cfg.run.output));
    std::string line;
    std::getline(rows, line);
    int count = 0;
    while (std::getline(rows, line)) {
        const double c = std::stod(line.substr(line.rfind(',') + 1));
        CHECK(c > 0.9);
        CHECK(c <= 1.0);
        ++count;
    }
    CHECK(count == cfg.pulse->n_cycles + 1);
}

TEST_CASE("pulsed command on a resonant mode grows quadratically") {
    TempDir tmp;
    auto cfg = cli::parse_config_text(R"({
        "bath": {"type": "discrete", "temperature": 0.0, "modes": [{"omega": 1.0, "g": 0.3}]},
        "pulse": {"delta_t": 3.14159265358979312, "n_cycles": 4}
    })");
    cfg.run.output = tmp.file("res.csv");
    std::ostringstream log;
    CHECK(cli::cmd_pulsed(cfg, log) == cli::kOk);
    std::istringstream rows(slurp(cfg.run.output));
    std::string line;
    std::getline(rows, line);
    std::vector<double> gammas;
    while (std::getline(rows, line)) {
        // third column
        size_t p1 = line.find(','), p2 = line.find(',', p1 + 1), p3 = line.find(',', p2 + 1);
        gammas.push_back(std::stod(line.substr(p2 + 1, p3 - p2 - 1)));
    }
    REQUIRE(gammas.size() == 5);
    for (int n = 1; n <= 4; ++n)
        CHECK(gammas[n] / gammas[1] == doctest::Approx(n * n).epsilon(1e-9));
}

TEST_CASE("verify-seq command exit codes and report") {
    std::ostringstream ok_log;
    CHECK(cli::cmd_verify_seq("d:1/2,p:x,d:1,p:x,d:1/2", "z", ok_log) == cli::kOk);
    CHECK(ok_log.str().find("DECOUPLED") != std::string::npos);

    std::ostringstream fail_log;
    CHECK(cli::cmd_verify_seq("d:1/2,p:x,d:1,p:x,d:1/2", "x", fail_log) ==
          cli::kVerificationFailed);
    CHECK(fail_log.str().find("X=1") != std::string::npos);
    CHECK(fail_log.str().find("NOT DECOUPLED") != std::string::npos);

    std::ostringstream xz_log;
    CHECK(cli::cmd_verify_seq("d:1,p:x,d:1,p:z,d:1,p:x,d:1,p:z,d:0", "xyz", xz_log) == cli::kOk);

    std::ostringstream warn_log;
    CHECK(cli::cmd_verify_seq("d:1,p:x,d:1", "z", warn_log) == cli::kOk);
    CHECK(warn_log.str().find("warning") != std::string::npos);

    std::ostringstream err_log;
    const int code = cli::run_guarded(
        [&] { return cli::cmd_verify_seq("d:1,p:q,d:1", "z", err_log); }, err_log);
    CHECK(code == cli::kConfigErrorCode);
}

TEST_CASE("sweep command emits rows and a quadratic slope") {
    TempDir tmp;
    auto cfg = cli::parse_config_text(R"({
        "bath": {"type": "ohmic", "alpha": 0.25, "omega_c": 100.0, "temperature": 1.0e4},
        "sweep": {"t_end": 0.02, "dt_min": 1e-4, "dt_max": 1e-3, "points": 6}
    })");
    cfg.run.output = tmp.file("sweep.csv");
    cfg.workers = 2;
    std::ostringstream log;
    CHECK(cli::cmd_sweep(cfg, log) == cli::kOk);
    const std::string text = slurp(cfg.run.output);
    CHECK(text.rfind("delta_t,n_cycles,gamma_pulsed,gamma_free,suppression\n", 0) == 0);
    CHECK(count_lines(text) >= 6);
    const std::string printed = log.str();
    const auto pos = printed.find("slope = ");
    REQUIRE(pos != std::string::npos);
    const double slope = std::stod(printed.substr(pos + 8));
    CHECK(slope == doctest::Approx(2.0).epsilon(0.05));

    // byte-for-byte deterministic with a different worker count
    cfg.run.output = tmp.file("sweep2.csv");
    cfg.workers = 5;
    std::ostringstream log2;
    cli::cmd_sweep(cfg, log2);
    CHECK(slurp(tmp.file("sweep.csv")) == slurp(tmp.file("sweep2.csv")));
}

TEST_CASE("exact-compare runs a custom discrete case from config") {
    auto cfg = cli::parse_config_text(R"({
        "bath": {"type": "discrete", "temperature": 0.0, "modes": [{"omega": 1.3, "g": 0.4}]},
        "exact": {"omega0": 1.0, "n_max": 16, "coupling": "dephasing"},
        "run": {"t_max": 4.0}
    })");
    std::ostringstream log;
    CHECK(cli::cmd_exact_compare(cfg, log) == cli::kOk);
    CHECK(log.str().find("custom case") != std::string::npos);
    CHECK(log.str().find("PASS") != std::string::npos);

    // a custom case without truncation depths is a config error
    auto bad = cli::parse_config_text(R"({
        "bath": {"type": "discrete", "temperature": 0.0, "modes": [{"omega": 1.3, "g": 0.4}]},
        "exact": {"n_max": []}
    })");
    std::ostringstream err;
    const int code = cli::run_guarded([&] { return cli::cmd_exact_compare(bad, err); }, err);
    CHECK(code == cli::kConfigErrorCode);
}

TEST_CASE("echo command") {
    std::ostringstream log;
    auto cfg = cli::preset("fig1H");
    cfg.pulse = cli::PulseConfig{1e-4, 1};
    CHECK(cli::cmd_echo(cfg, 0.02, log) == cli::kOk);
    CHECK(log.str().find("gain") != std::string::npos);

    std::ostringstream err;
    const int code = cli::run_guarded([&] { return cli::cmd_echo(cfg, 0.0205 + 3e-5, err); }, err);
    CHECK(code == cli::kConfigErrorCode);
}

TEST_CASE("numerical failures exit with their own code") {
    TempDir tmp;
    auto cfg = cli::preset("fig1L");
    cfg.run.t_max = 1.0e4;   // forces the integrator past its evaluation cap
    cfg.run.n_samples = 2;
    cfg.run.output = tmp.file("far.csv");
    std::ostringstream log;
    const int code = cli::run_guarded([&] { return cli::cmd_free_decay(cfg, log); }, log);
    CHECK(code == cli::kNumericalFailure);
}

TEST_CASE("plot script emission") {
    TempDir tmp;
    auto cfg = cli::preset("fig1H");
    cfg.run.t_max = 0.002;
    cfg.run.n_samples = 5;
    cfg.run.output = tmp.file("c.csv");
    cfg.run.plot_script = tmp.file("c.gp");
    std::ostringstream log;
    CHECK(cli::cmd_free_decay(cfg, log) == cli::kOk);
    const std::string script = slurp(cfg.run.plot_script);
    CHECK(script.find("gnuplot") != std::string::npos);
    CHECK(script.find("c.csv") != std::string::npos);
}

TEST_CASE("csv cell formatting uses 12 significant digits") {
    CHECK(csv::format_double(1.0) == "1");
    CHECK(csv::format_double(0.1) == "0.1");
    CHECK(csv::format_double(123456789012345.0) == "1.23456789012e+14");
    CHECK(csv::format_double(1.0 / 3.0) == "0.333333333333");
}
