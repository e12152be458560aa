#include "qdc/verification.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qdc/decay.hpp"
#include "qdc/parallel.hpp"

namespace qdc::verify {

std::vector<OracleCase> oracle_cases() {
    using bath::Mode;
    return {
        {"1-mode T=0", {Mode(1.3, 0.4)}, 0.0, {18}, 4.8},
        {"1-mode T=w/2", {Mode(1.3, {0.3, 0.2})}, 0.65, {16}, 4.8},
        {"1-mode T=2w", {Mode(1.0, 0.3)}, 2.0, {30}, 6.0},
        {"2-mode T=0", {Mode(1.0, 0.35), Mode(2.2, 0.2)}, 0.0, {12, 8}, 6.0},
        {"2-mode T=w1/2", {Mode(1.0, 0.3), Mode(2.2, {0.0, 0.25})}, 0.5, {12, 8}, 6.0},
        {"2-mode T=2w1", {Mode(1.0, 0.25), Mode(2.6, 0.2)}, 2.0, {30, 12}, 6.0},
    };
}

FreeAgreement compare_free(const exact::ExactModel& model, int points, double t_span) {
    if (points < 1 || !(t_span > 0.0))
        throw std::invalid_argument("compare_free: bad grid");
    const auto& spec = model.spec();
    FreeAgreement out;

    exact::DensityMatrix rho = model.initial_state();
    std::vector<exact::QubitSample> samples;
    samples.push_back(exact::QubitSample{0.0, model.partial_trace_qubit(rho)});
    const double step = t_span / points;
    for (int j = 1; j <= points; ++j) {
        rho = model.propagate(rho, step);
        samples.push_back(exact::QubitSample{j * step, model.partial_trace_qubit(rho)});
        const double t = j * step;
        out.t.push_back(t);
        out.gamma_analytic.push_back(decay::gamma0_discrete(spec.modes, spec.temperature, t));
        out.gamma_exact.push_back(exact::extracted_gamma(samples, samples.size() - 1));
        out.max_error = std::max(out.max_error,
                                 std::abs(out.gamma_analytic.back() - out.gamma_exact.back()));
    }
    return out;
}

std::vector<PulsedAgreement> compare_pulsed(const exact::ExactModel& model,
                                            const std::vector<double>& delta_ts, int n_cycles) {
    const auto& spec = model.spec();
    std::vector<PulsedAgreement> out;
    for (double dt : delta_ts) {
        PulsedAgreement row;
        row.delta_t = dt;
        const control::PulseTrainSpec full(dt, n_cycles);
        const auto samples = model.run_train(full);
        for (int n = 1; n <= n_cycles; ++n) {
            row.gamma_analytic.push_back(
                control::gamma_pulsed_discrete(spec.modes, spec.temperature,
                                               control::PulseTrainSpec(dt, n)));
            row.gamma_exact.push_back(exact::extracted_gamma(samples, n));
            row.max_error = std::max(row.max_error,
                                     std::abs(row.gamma_analytic.back() - row.gamma_exact.back()));
        }
        out.push_back(std::move(row));
    }
    return out;
}

double fit_loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("fit_loglog_slope: need matching series of length >= 2");
    const size_t n = x.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < n; ++i) {
        if (!(x[i] > 0.0) || !(y[i] > 0.0))
            throw std::invalid_argument("fit_loglog_slope: values must be positive");
        const double lx = std::log(x[i]);
        const double ly = std::log(y[i]);
        sx += lx; sy += ly; sxx += lx * lx; sxy += lx * ly;
    }
    const double denom = n * sxx - sx * sx;
    return (n * sxy - sx * sy) / denom;
}

namespace {
exact::ExactModelSpec without_coupling(exact::ExactModelSpec spec) {
    for (auto& m : spec.modes) m.g = 0.0;
    for (auto& g : spec.axis_g) g.assign(g.size(), 0.0);
    return spec;
}

exact::DensityMatrix evolve_once(const exact::ExactModel& model, const pauli::GateSequence& seq,
                                 exact::DensityMatrix rho) {
    for (size_t k = 0; k < seq.durations.size(); ++k) {
        const double tau = seq.durations[k].to_double() * seq.base_time;
        if (tau > 0.0) rho = model.propagate(rho, tau);
        if (k < seq.pulses.size() && seq.pulses[k].letter != pauli::Letter::I) {
            const char axis =
                static_cast<char>(std::tolower(pauli::letter_char(seq.pulses[k].letter)));
            rho = model.apply_pulse(rho, axis, std::numbers::pi);
        }
    }
    return rho;
}
}  // namespace

double one_cycle_state_error(const exact::ExactModelSpec& spec, const pauli::GateSequence& seq) {
    exact::ExactModel coupled(spec);
    exact::ExactModel reference(without_coupling(spec));
    const exact::DensityMatrix rho0 = coupled.initial_state();
    const exact::DensityMatrix a = evolve_once(coupled, seq, rho0);
    const exact::DensityMatrix b = evolve_once(reference, seq, rho0);
    return (a.mat - b.mat).norm();
}

pauli::GateSequence uniform_train(double delta_t, char axis) {
    const pauli::Letter letter = axis == 'x'   ? pauli::Letter::X
                                 : axis == 'y' ? pauli::Letter::Y
                                 : axis == 'z' ? pauli::Letter::Z
                                               : pauli::Letter::I;
    if (letter == pauli::Letter::I) throw std::invalid_argument("uniform_train: axis must be x, y or z");
    pauli::GateSequence seq;
    seq.durations = {pauli::Rational(1), pauli::Rational(1), pauli::Rational(0)};
    seq.pulses = {pauli::PauliOp{0, letter}, pauli::PauliOp{0, letter}};
    seq.base_time = delta_t;
    return seq;
}

std::vector<int> cycle_counts_for_range(double t_end, double dt_min, double dt_max, int points) {
    if (!(t_end > 0.0) || !(dt_min > 0.0) || !(dt_max > dt_min) || points < 2)
        throw std::invalid_argument("cycle_counts_for_range: bad range");
    std::vector<int> counts;
    for (int j = 0; j < points; ++j) {
        const double dt = dt_min * std::pow(dt_max / dt_min, j / static_cast<double>(points - 1));
        const int n = std::max(1, static_cast<int>(std::round(t_end / (2.0 * dt))));
        counts.push_back(n);
    }
    std::sort(counts.begin(), counts.end());
    counts.erase(std::unique(counts.begin(), counts.end()), counts.end());
    return counts;
}

std::vector<SweepRow> suppression_sweep(const bath::BathSpec& spec, double t_end,
                                        const std::vector<int>& cycle_counts, int workers) {
    const double gamma_free = decay::gamma0(spec, t_end);
    std::vector<SweepRow> rows(cycle_counts.size());
    parallel_for(static_cast<long>(cycle_counts.size()), workers, [&](long i) {
        const int n = cycle_counts[i];
        const double dt = t_end / (2.0 * n);
        const double gp = control::gamma_pulsed(spec, control::PulseTrainSpec(dt, n));
        rows[i] = SweepRow{dt, n, gp, gamma_free, gamma_free > 0.0 ? gp / gamma_free : 0.0};
    });
    std::sort(rows.begin(), rows.end(),
              [](const SweepRow& a, const SweepRow& b) { return a.delta_t < b.delta_t; });
    return rows;
}

}  // namespace qdc::verify
