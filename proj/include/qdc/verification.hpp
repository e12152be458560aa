// verification.hpp — Analytic-vs-exact comparison machinery: the standard
// discrete-bath oracle cases, free and pulsed agreement runs, scaling-law
// fits, and the one-cycle decoupling error probe.

#pragma once

#include <string>
#include <vector>

#include "qdc/exact.hpp"

namespace qdc::verify {

struct OracleCase {
    std::string label;
    std::vector<bath::Mode> modes;
    double temperature;
    std::vector<int> n_max;
    double t_span;    // horizon for the free-decay comparison grid
};

// Six standard configurations: one and two modes at T = 0, T = omega/2 and
// T = 2*omega, truncated so the top-level thermal occupancy sits below 1e-6.
std::vector<OracleCase> oracle_cases();

struct FreeAgreement {
    std::vector<double> t;
    std::vector<double> gamma_analytic;
    std::vector<double> gamma_exact;
    double max_error = 0.0;
};

FreeAgreement compare_free(const exact::ExactModel& model, int points, double t_span);

struct PulsedAgreement {
    double delta_t;
    std::vector<double> gamma_analytic;   // index = cycle count - 1
    std::vector<double> gamma_exact;
    double max_error = 0.0;
};

std::vector<PulsedAgreement> compare_pulsed(const exact::ExactModel& model,
                                            const std::vector<double>& delta_ts, int n_cycles);

// Least-squares slope of log(y) against log(x).
double fit_loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

// Frobenius distance after one cycle between a coupled model and its
// uncoupled twin driven through the same sequence: O(dt^2) when the
// sequence decouples the coupling at zeroth order, O(dt) when it does not.
// The half-interval-bracketed builders of the pauli module are
// time-symmetric cycles, whose odd-order corrections cancel too (O(dt^3));
// the uniform train below shows the generic O(dt^2) behavior.
double one_cycle_state_error(const exact::ExactModelSpec& spec,
                             const pauli::GateSequence& seq);

// Plain uniformly spaced two-pulse cycle: dt, pulse, dt, pulse.
pauli::GateSequence uniform_train(double delta_t, char axis);

// CP-style suppression sweep at fixed end time: delta_t = t_end / (2N) for
// each cycle count, so every point is stroboscopic.
struct SweepRow {
    double delta_t;
    int n_cycles;
    double gamma_pulsed;
    double gamma_free;
    double suppression;   // gamma_pulsed / gamma_free
};

std::vector<SweepRow> suppression_sweep(const bath::BathSpec& spec, double t_end,
                                        const std::vector<int>& cycle_counts, int workers = 1);

// Log-spaced integer cycle counts giving delta_t in [dt_min, dt_max].
std::vector<int> cycle_counts_for_range(double t_end, double dt_min, double dt_max, int points);

}  // namespace qdc::verify
