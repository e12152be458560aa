#include "qdc/bath.hpp"

#include <cmath>
#include <stdexcept>

namespace qdc::bath {

Mode::Mode(double omega_, std::complex<double> g_) : omega(omega_), g(g_) {
    if (!(omega > 0.0)) throw std::invalid_argument("Mode: omega must be > 0");
    if (!std::isfinite(omega) || !std::isfinite(std::abs(g)))
        throw std::invalid_argument("Mode: non-finite parameter");
}

BathSpec BathSpec::ohmic(double alpha, double omega_c, double temperature) {
    if (!(alpha >= 0.0)) throw std::invalid_argument("BathSpec: alpha must be >= 0");
    if (!(omega_c > 0.0)) throw std::invalid_argument("BathSpec: omega_c must be > 0");
    if (!(temperature >= 0.0)) throw std::invalid_argument("BathSpec: temperature must be >= 0");
    return BathSpec{Continuum{alpha, omega_c}, temperature};
}

BathSpec BathSpec::discrete(std::vector<Mode> modes, double temperature) {
    if (!(temperature >= 0.0)) throw std::invalid_argument("BathSpec: temperature must be >= 0");
    return BathSpec{Discrete{std::move(modes)}, temperature};
}

const Continuum& BathSpec::continuum() const {
    if (auto* c = std::get_if<Continuum>(&kind)) return *c;
    throw std::invalid_argument("BathSpec: continuum variant required");
}

const Discrete& BathSpec::discrete_modes() const {
    if (auto* d = std::get_if<Discrete>(&kind)) return *d;
    throw std::invalid_argument("BathSpec: discrete variant required");
}

double spectral_density(const BathSpec& spec, double omega) {
    const Continuum& c = spec.continuum();
    if (!(omega >= 0.0)) throw std::invalid_argument("spectral_density: omega must be >= 0");
    return c.alpha * omega * std::exp(-omega / c.omega_c);
}

double coth_half(double omega, double temperature) {
    if (!(omega > 0.0)) throw std::domain_error("coth_half: omega must be > 0");
    if (temperature == 0.0) return 1.0;
    const double x = omega / (2.0 * temperature);
    if (x < 1e-6) {
        // coth(x) = 1/x + x/3 + O(x^3); written in the original variables
        return 2.0 * temperature / omega + omega / (6.0 * temperature);
    }
    return 1.0 / std::tanh(x);
}

double correlation_time(const BathSpec& spec) {
    if (spec.is_continuum()) return 1.0 / spec.continuum().omega_c;
    const auto& modes = spec.discrete_modes().modes;
    if (modes.empty()) throw std::invalid_argument("correlation_time: empty mode list");
    double omega_max = 0.0;
    for (const auto& m : modes) omega_max = std::max(omega_max, m.omega);
    return 1.0 / omega_max;
}

}  // namespace qdc::bath
