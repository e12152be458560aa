// bath.hpp — Bath descriptions: Ohmic continuum spectral densities and
// explicit discrete mode lists, plus thermal-factor primitives.

#pragma once

#include <complex>
#include <variant>
#include <vector>

namespace qdc::bath {

// One bosonic mode: angular frequency and complex coupling amplitude.
// Units: hbar = k_B = 1 throughout the toolkit.
struct Mode {
    double omega;                  // > 0, strictly
    std::complex<double> g;

    Mode(double omega_, std::complex<double> g_);
};

struct Discrete {
    std::vector<Mode> modes;
};

// Ohmic family with exponential ultraviolet cutoff: I(w) = alpha * w * exp(-w/omega_c).
// The overall amplitude alpha is a free normalization; the default 0.25 makes the
// 4*I(w) weight entering the decoherence integrals have unit slope at small w.
struct Continuum {
    double alpha = 0.25;
    double omega_c = 1.0;
};

struct BathSpec {
    std::variant<Discrete, Continuum> kind;
    double temperature = 0.0;      // >= 0; T = 0 means quantum fluctuations only

    static BathSpec ohmic(double alpha, double omega_c, double temperature);
    static BathSpec discrete(std::vector<Mode> modes, double temperature);

    bool is_continuum() const { return std::holds_alternative<Continuum>(kind); }
    const Continuum& continuum() const;
    const Discrete& discrete_modes() const;
};

// I(w) for the continuum variant. Rejects discrete specs.
double spectral_density(const BathSpec& spec, double omega);

// coth(omega / 2T). Exactly 1 at T = 0; series branch for omega/2T < 1e-6.
double coth_half(double omega, double temperature);

// Shortest bath memory timescale: 1/omega_c, or 1/max omega_k for mode lists.
double correlation_time(const BathSpec& spec);

}  // namespace qdc::bath
