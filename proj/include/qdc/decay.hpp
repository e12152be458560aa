// decay.hpp — Free (uncontrolled) dephasing: the damping function Gamma_0 for
// discrete and continuum baths, and sampled coherence curves.

#pragma once

#include <string>
#include <vector>

#include "qdc/bath.hpp"

namespace qdc::decay {

struct CurveSample {
    double t;
    double gamma;       // >= 0
    double coherence;   // exp(-gamma), in [0, 1]
};

// Sampled |rho_01(t)| / |rho_01(0)| series. Magnitude only: the deterministic
// qubit-splitting phase is excluded.
struct DecoherenceCurve {
    std::vector<CurveSample> samples;
    std::string label;
};

// Exact mode sum: Gamma_0(t) = sum_k 4|g_k|^2 coth(w_k/2T) (1 - cos w_k t) / w_k^2,
// evaluated through 1 - cos x = 2 sin^2(x/2) to avoid cancellation.
double gamma0_discrete(const std::vector<bath::Mode>& modes, double temperature, double t);

// Continuum analogue: integral of I(w) * 4 coth(w/2T) (1 - cos w t) / w^2 over
// w in (0, upper cutoff], with the removable w -> 0 endpoint handled by a
// closed-form strip below 1e-12 * omega_c. Relative accuracy 1e-8.
double gamma0_continuum(const bath::BathSpec& spec, double t);

// Frequency weight common to all damping integrals: 4 I(w) coth(w/2T) / w^2.
double damping_weight(const bath::BathSpec& spec, double omega);

double gamma0(const bath::BathSpec& spec, double t);

// Uniform grid on [0, t_max]; first sample is (0, 0, 1).
DecoherenceCurve free_curve(const bath::BathSpec& spec, double t_max, int n_samples);

}  // namespace qdc::decay
