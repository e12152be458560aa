// control.hpp — Bang-bang-controlled dephasing: the pulsed damping function
// Gamma_P in a numerically stable filter-function form, the textbook
// interference-factor form kept for comparison, stroboscopic coherence
// series, and echo gain.

#pragma once

#include "qdc/bath.hpp"
#include "qdc/decay.hpp"

namespace qdc::control {

// Train of ideal pi-pulses about x with uniform separation delta_t. One cycle
// is two pulses (duration 2*delta_t); coherence is evaluated at cycle
// boundaries t_N = 2*N*delta_t only.
struct PulseTrainSpec {
    double delta_t;
    int n_cycles;

    PulseTrainSpec(double delta_t_, int n_cycles_);
    double end_time() const { return 2.0 * n_cycles * delta_t; }
};

// Interference filter F(theta, N) = 2 sin^2(N theta) tan^2(theta/2) with
// theta = w * delta_t. The singularities at odd multiples of pi are
// removable; within 1e-4 of one the evaluation switches to the exact
// reduced form around it, and F equals 8 N^2 at the pole itself.
double filter_factor(double theta, int n_cycles);

// Gamma_P = sum_k 4|g_k|^2 coth(w_k/2T)/w_k^2 * F(w_k delta_t, N).
double gamma_pulsed_discrete(const std::vector<bath::Mode>& modes, double temperature,
                             const PulseTrainSpec& train);

// Continuum analogue, split at the filter peaks w = (2j+1) pi / delta_t.
double gamma_pulsed_continuum(const bath::BathSpec& spec, const PulseTrainSpec& train);

double gamma_pulsed(const bath::BathSpec& spec, const PulseTrainSpec& train);

// Textbook interference-factor form |1 - f_k|^2 with f_k a geometric sum over
// cycles, evaluated verbatim for documentation and comparison. Agrees with
// gamma_pulsed_discrete at N = 1 (the two are algebraically identical there)
// but fails the continuous-flipping suppression limit for N >= 2; the stable
// form is the one certified against the exact engine. Singular at
// w * delta_t in pi * Z.
double gamma_pulsed_interference(const std::vector<bath::Mode>& modes, double temperature,
                                 const PulseTrainSpec& train);

// Coherence sampled at cycle boundaries t_N = 2 N delta_t, N = 1..n_max,
// preceded by the trivial (0, 0, 1) anchor sample.
decay::DecoherenceCurve stroboscopic_series(const bath::BathSpec& spec, double delta_t,
                                            int n_max);

// Gamma_0(t) - Gamma_P(N, delta_t) with t = 2 N delta_t: the log-scale
// coherence recovered by pulsing to an echo at t. Negative values are
// possible for resonant discrete baths. t must be an integer number of
// cycles.
double echo_gain(const bath::BathSpec& spec, double t, double delta_t);

}  // namespace qdc::control
