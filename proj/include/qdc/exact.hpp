// exact.hpp — Numerically exact qubit (x) truncated-Fock-bath density-matrix
// evolution with instantaneous pulses: the brute-force oracle against which
// the analytic damping functions and the decoupling verifier are checked.

#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <vector>

#include "qdc/bath.hpp"
#include "qdc/control.hpp"
#include "qdc/pauli.hpp"

namespace qdc::exact {

enum class CouplingKind { Dephasing, JaynesCummings, General };

struct ExactModelSpec {
    double omega0 = 1.0;                 // qubit splitting
    std::vector<bath::Mode> modes;       // at most 3
    std::vector<int> n_max;              // Fock levels 0..n_max per mode, each >= 2
    double temperature = 0.0;
    CouplingKind coupling = CouplingKind::Dephasing;
    // General coupling: per-axis amplitudes, one entry per mode (x, y, z
    // order); an empty vector leaves that axis uncoupled. Dephasing and
    // JaynesCummings use the modes' own g instead.
    std::array<std::vector<std::complex<double>>, 3> axis_g{};

    ExactModelSpec with_uniform_n_max(int n) const;
};

struct TruncationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DensityMatrix {
    Eigen::MatrixXcd mat;

    double trace_deviation() const;
    double hermiticity_deviation() const;
    double min_eigenvalue() const;
    // trace = 1, Hermitian, eigenvalues >= -tol
    void validate(double tol = 1e-10) const;
};

struct QubitSample {
    double t;
    Eigen::Matrix2cd rho;
};

// -ln( |rho_01(t)| / |rho_01(0)| ) for a sampled trajectory
double extracted_gamma(const std::vector<QubitSample>& samples, size_t index);

Eigen::MatrixXcd build_hamiltonian(const ExactModelSpec& spec);

class ExactModel {
  public:
    explicit ExactModel(ExactModelSpec spec);

    const ExactModelSpec& spec() const { return spec_; }
    long dimension() const { return hamiltonian_.rows(); }
    long bath_dimension() const { return hamiltonian_.rows() / 2; }
    const Eigen::MatrixXcd& hamiltonian() const { return hamiltonian_; }
    const Eigen::VectorXd& eigenvalues() const { return evals_; }

    // Bath thermal state on the truncated space; vacuum projector at T = 0.
    // Rejects truncations whose top-level occupancy exceeds 1e-6.
    DensityMatrix thermal_state() const;

    // qubit (x) thermal bath product state
    DensityMatrix initial_state(const Eigen::Vector2cd& qubit = plus_state()) const;

    // exp(-iH tau) rho exp(+iH tau) through the cached eigendecomposition
    DensityMatrix propagate(const DensityMatrix& rho, double tau) const;

    // (R (x) I) rho (R (x) I)^dag with R = exp(-i angle sigma_axis / 2)
    DensityMatrix apply_pulse(const DensityMatrix& rho, char axis, double angle) const;

    Eigen::Matrix2cd partial_trace_qubit(const DensityMatrix& rho) const;

    // Uniform pi_x train; samples the reduced qubit matrix at t = 0 and at
    // every cycle boundary 2 m delta_t, m = 1..n_cycles.
    std::vector<QubitSample> run_train(const control::PulseTrainSpec& train,
                                       const Eigen::Vector2cd& qubit = plus_state()) const;

    // General gate sequence, repeated; samples at t = 0 and every cycle end.
    std::vector<QubitSample> run_sequence(const pauli::GateSequence& seq, int repetitions,
                                          const Eigen::Vector2cd& qubit = plus_state()) const;

    // maximal initial coherence, (|0> + |1>)/sqrt(2)
    static Eigen::Vector2cd plus_state();

  private:
    ExactModelSpec spec_;
    Eigen::MatrixXcd hamiltonian_;
    Eigen::MatrixXcd evecs_;
    Eigen::VectorXd evals_;
};

struct ConvergenceRow {
    int n_max;
    double max_delta_gamma;   // vs the previous truncation; 0 for the first row
};

struct ConvergenceReport {
    std::vector<ConvergenceRow> rows;
    double threshold = 1e-5;
    bool pass = false;        // last consecutive difference below threshold
};

// Reruns a free-decay reference curve across uniform truncations.
ConvergenceReport convergence_scan(const ExactModelSpec& spec, const std::vector<int>& n_max_list,
                                   double t_max, int n_samples = 10);

}  // namespace qdc::exact
