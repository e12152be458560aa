// pauli.hpp — Single-qubit Pauli-group algebra: pulse sequences as unitary
// frame chains, cyclicity, and the zeroth-order average-Hamiltonian
// decoupling verifier.

#pragma once

#include <array>
#include <string>
#include <vector>

#include "qdc/rational.hpp"

namespace qdc::pauli {

enum class Letter : int { I = 0, X = 1, Y = 2, Z = 3 };

char letter_char(Letter l);

// Element of the 16-member single-qubit Pauli group: i^phase_i * letter.
struct PauliOp {
    int phase_i = 0;           // exponent of i, 0..3
    Letter letter = Letter::I;

    bool operator==(const PauliOp& o) const = default;
};

PauliOp multiply(const PauliOp& a, const PauliOp& b);
inline PauliOp operator*(const PauliOp& a, const PauliOp& b) { return multiply(a, b); }
PauliOp inverse(const PauliOp& p);

// P^-1 sigma P for a phaseless letter sigma; the result is +/- a letter.
PauliOp conjugate_frame(const PauliOp& frame, const PauliOp& sigma);

// Timed ideal pulse sequence: durations (in units of a base time) alternate
// with pi-pulses, starting and ending with a duration. durations.size() ==
// pulses.size() + 1.
struct GateSequence {
    std::vector<Rational> durations;
    std::vector<PauliOp> pulses;
    double base_time = 1.0;

    Rational cycle_units() const;
    double cycle_time() const { return cycle_units().to_double() * base_time; }
    void validate() const;
};

// Frame chain: element k is the product of the first k pulses (element 0 is
// the identity).
std::vector<PauliOp> cumulative_frames(const GateSequence& seq);

struct CyclicCheck {
    bool cyclic;       // full-cycle product is the identity letter
    int phase_i;       // residual global phase, reported but never failing
};

CyclicCheck is_cyclic(const GateSequence& seq);

// Real (exactly rational) coefficients over the Pauli basis {I, X, Y, Z}.
struct PauliCoeffs {
    std::array<Rational, 4> c{};
    bool all_zero() const;
};

struct AxisAverage {
    char axis;             // 'x', 'y' or 'z'
    PauliCoeffs coeffs;
    bool decoupled;        // every coefficient exactly zero
};

struct AverageReport {
    std::vector<AxisAverage> couplings;
    PauliCoeffs system_term;   // transformed qubit Hamiltonian, for H_S along z
    bool cyclic;
    int cycle_phase_i;

    bool all_decoupled() const;
};

// Time average (1/T_c) sum_k dt_k P_k^-1 sigma_alpha P_k for each requested
// coupling axis, in exact rational arithmetic. Warns (via the report's cyclic
// flag) rather than failing when the sequence is not cyclic.
AverageReport zeroth_average(const GateSequence& seq, const std::string& axes);

// Built-in sequences. delta_t is the physical base separation.
GateSequence build_cp(double delta_t);       // dt/2, X, dt, X, dt/2
GateSequence build_z_train(double delta_t);  // dt/2, Z, dt, Z, dt/2
GateSequence build_xzxz(double delta_t);     // four equal segments, X Z X Z

// Text grammar: comma-separated "d:<rational>" and "p:<axis>" entries,
// strictly alternating, starting and ending with a duration. Whitespace
// around entries is ignored on parse; print emits the canonical spaceless
// form and round-trips bit-exactly.
GateSequence parse_sequence(const std::string& text, double base_time = 1.0);
std::string print_sequence(const GateSequence& seq);

}  // namespace qdc::pauli
