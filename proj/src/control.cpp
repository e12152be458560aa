#include "qdc/control.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "qdc/quad.hpp"

namespace qdc::control {

namespace {
constexpr double kPoleWindow = 1e-4;
constexpr double kTailEps = 1e-12;
constexpr double kQuadTol = 1e-9;

double mode_weight(const bath::Mode& m, double temperature) {
    return 4.0 * std::norm(m.g) * bath::coth_half(m.omega, temperature) / (m.omega * m.omega);
}
}  // namespace

PulseTrainSpec::PulseTrainSpec(double delta_t_, int n_cycles_)
    : delta_t(delta_t_), n_cycles(n_cycles_) {
    if (!(delta_t > 0.0)) throw std::invalid_argument("PulseTrainSpec: delta_t must be > 0");
    if (n_cycles < 1) throw std::invalid_argument("PulseTrainSpec: n_cycles must be >= 1");
}

double filter_factor(double theta, int n_cycles) {
    if (n_cycles < 1) throw std::invalid_argument("filter_factor: n_cycles must be >= 1");
    const double n = static_cast<double>(n_cycles);

    // signed distance to the nearest odd multiple of pi
    const double r = std::remainder(theta, 2.0 * std::numbers::pi);
    const double eps = (r >= 0.0) ? r - std::numbers::pi : r + std::numbers::pi;

    if (std::abs(eps) < kPoleWindow) {
        if (std::abs(eps) < 1e-8) {
            // expansion at the removable singularity; exactly 8 N^2 at the pole
            return 8.0 * n * n * (1.0 - (n * n / 3.0 + 1.0 / 6.0) * eps * eps);
        }
        // same function rewritten about the pole: sin^2 and cot^2 of small arguments
        const double sn = std::sin(n * eps);
        const double ct = std::cos(0.5 * eps) / std::sin(0.5 * eps);
        return 2.0 * sn * sn * ct * ct;
    }
    const double sn = std::sin(n * theta);
    const double tn = std::tan(0.5 * theta);
    return 2.0 * sn * sn * tn * tn;
}

double gamma_pulsed_discrete(const std::vector<bath::Mode>& modes, double temperature,
                             const PulseTrainSpec& train) {
    double total = 0.0;
    for (const auto& m : modes)
        total += mode_weight(m, temperature) * filter_factor(m.omega * train.delta_t, train.n_cycles);
    return total;
}

double gamma_pulsed_continuum(const bath::BathSpec& spec, const PulseTrainSpec& train) {
    const auto& c = spec.continuum();
    if (c.alpha == 0.0) return 0.0;

    const double w_lo = 1e-12 * c.omega_c;
    const double w_hi = quad::upper_cutoff(spec, kTailEps);
    std::vector<double> peaks;
    for (int j = 0;; ++j) {
        const double w = (2 * j + 1) * std::numbers::pi / train.delta_t;
        if (w >= w_hi) break;
        if (w > w_lo) peaks.push_back(w);
    }
    auto integrand = [&](double w) {
        return decay::damping_weight(spec, w) * filter_factor(w * train.delta_t, train.n_cycles);
    };
    // The [0, w_lo] strip is O(w_lo^3): the filter vanishes as (w delta_t)^4.
    return quad::integrate_with_breakpoints(integrand, w_lo, w_hi, peaks, kQuadTol).value;
}

double gamma_pulsed(const bath::BathSpec& spec, const PulseTrainSpec& train) {
    if (spec.is_continuum()) return gamma_pulsed_continuum(spec, train);
    return gamma_pulsed_discrete(spec.discrete_modes().modes, spec.temperature, train);
}

double gamma_pulsed_interference(const std::vector<bath::Mode>& modes, double temperature,
                                 const PulseTrainSpec& train) {
    using namespace std::complex_literals;
    double total = 0.0;
    for (const auto& m : modes) {
        const double theta = m.omega * train.delta_t;
        const std::complex<double> denom = 1.0 - std::exp(2.0i * theta);
        if (std::abs(denom) < 1e-12)
            throw std::domain_error("gamma_pulsed_interference: singular at w*delta_t in pi*Z");
        std::complex<double> cycle_sum = 0.0;
        for (int n = 1; n <= train.n_cycles; ++n)
            cycle_sum += std::exp(2.0i * (static_cast<double>(n - 1) * theta));
        const std::complex<double> f = 2.0 * (1.0 - std::exp(1.0i * theta)) / denom * cycle_sum;
        const double s = std::sin(0.5 * m.omega * train.end_time());
        const double gamma0_mode = 2.0 * mode_weight(m, temperature) * s * s;
        total += gamma0_mode * std::norm(1.0 - f);
    }
    return total;
}

decay::DecoherenceCurve stroboscopic_series(const bath::BathSpec& spec, double delta_t,
                                            int n_max) {
    if (n_max < 1) throw std::invalid_argument("stroboscopic_series: n_max must be >= 1");
    decay::DecoherenceCurve curve;
    curve.label = "pulsed";
    curve.samples.reserve(n_max + 1);
    curve.samples.push_back(decay::CurveSample{0.0, 0.0, 1.0});
    for (int n = 1; n <= n_max; ++n) {
        PulseTrainSpec train(delta_t, n);
        const double g = gamma_pulsed(spec, train);
        curve.samples.push_back(decay::CurveSample{train.end_time(), g, std::exp(-g)});
    }
    return curve;
}

double echo_gain(const bath::BathSpec& spec, double t, double delta_t) {
    if (!(delta_t > 0.0)) throw std::invalid_argument("echo_gain: delta_t must be > 0");
    const double cycles = t / (2.0 * delta_t);
    const double rounded = std::round(cycles);
    if (rounded < 1.0 || std::abs(cycles - rounded) > 1e-9 * std::max(1.0, rounded))
        throw std::invalid_argument("echo_gain: t must be a positive integer number of cycles 2*N*delta_t");
    PulseTrainSpec train(delta_t, static_cast<int>(rounded));
    return decay::gamma0(spec, t) - gamma_pulsed(spec, train);
}

}  // namespace qdc::control
