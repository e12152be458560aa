#include "qdc/decay.hpp"

#include <cmath>
#include <stdexcept>

#include "qdc/quad.hpp"

namespace qdc::decay {

namespace {
constexpr double kTailEps = 1e-12;
constexpr double kQuadTol = 1e-9;

// Contribution of the [0, w_lo] strip where the integrand of gamma0_continuum
// has its removable endpoint: integrand -> 4 alpha T t^2 (T > 0) or
// 2 alpha w t^2 (T = 0) as w -> 0.
double low_frequency_strip(const bath::Continuum& c, double temperature, double t, double w_lo) {
    if (temperature > 0.0) return 4.0 * c.alpha * temperature * t * t * w_lo;
    return c.alpha * t * t * w_lo * w_lo;
}
}  // namespace

double gamma0_discrete(const std::vector<bath::Mode>& modes, double temperature, double t) {
    if (!(t >= 0.0)) throw std::invalid_argument("gamma0_discrete: t must be >= 0");
    double total = 0.0;
    for (const auto& m : modes) {
        const double s = std::sin(0.5 * m.omega * t);
        const double g2 = std::norm(m.g);
        total += 8.0 * g2 * bath::coth_half(m.omega, temperature) * s * s / (m.omega * m.omega);
    }
    return total;
}

double damping_weight(const bath::BathSpec& spec, double omega) {
    return 4.0 * bath::spectral_density(spec, omega) *
           bath::coth_half(omega, spec.temperature) / (omega * omega);
}

double gamma0_continuum(const bath::BathSpec& spec, double t) {
    if (!(t >= 0.0)) throw std::invalid_argument("gamma0_continuum: t must be >= 0");
    const auto& c = spec.continuum();
    if (t == 0.0 || c.alpha == 0.0) return 0.0;

    const double w_lo = 1e-12 * c.omega_c;
    const double w_hi = quad::upper_cutoff(spec, kTailEps);
    auto integrand = [&](double w) {
        const double s = std::sin(0.5 * w * t);
        return damping_weight(spec, w) * 2.0 * s * s;
    };
    quad::QuadResult r = quad::integrate(integrand, w_lo, w_hi, kQuadTol);
    return r.value + low_frequency_strip(c, spec.temperature, t, w_lo);
}

double gamma0(const bath::BathSpec& spec, double t) {
    if (spec.is_continuum()) return gamma0_continuum(spec, t);
    return gamma0_discrete(spec.discrete_modes().modes, spec.temperature, t);
}

DecoherenceCurve free_curve(const bath::BathSpec& spec, double t_max, int n_samples) {
    if (!(t_max > 0.0)) throw std::invalid_argument("free_curve: t_max must be > 0");
    if (n_samples < 2) throw std::invalid_argument("free_curve: n_samples must be >= 2");

    DecoherenceCurve curve;
    curve.label = "free";
    curve.samples.reserve(n_samples);
    for (int i = 0; i < n_samples; ++i) {
        const double t = t_max * static_cast<double>(i) / (n_samples - 1);
        const double g = (i == 0) ? 0.0 : gamma0(spec, t);
        curve.samples.push_back(CurveSample{t, g, std::exp(-g)});
    }
    return curve;
}

}  // namespace qdc::decay
