#include "qdc/exact.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qdc::exact {

namespace {

using Eigen::MatrixXcd;
using Eigen::VectorXd;
using std::complex;

constexpr long kDimensionCap = 4096;
constexpr double kHermTol = 1e-12;
constexpr double kTopLevelOccupancy = 1e-6;
const complex<double> kI(0.0, 1.0);

MatrixXcd kron(const MatrixXcd& a, const MatrixXcd& b) {
    MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (long i = 0; i < a.rows(); ++i)
        for (long j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

MatrixXcd lowering(int n_max) {
    MatrixXcd a = MatrixXcd::Zero(n_max + 1, n_max + 1);
    for (int n = 1; n <= n_max; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
    return a;
}

Eigen::Matrix2cd sigma(char axis) {
    Eigen::Matrix2cd s;
    switch (axis) {
        case 'i': s << 1, 0, 0, 1; break;
        case 'x': s << 0, 1, 1, 0; break;
        case 'y': s << 0, -kI, kI, 0; break;
        case 'z': s << 1, 0, 0, -1; break;
        default: throw std::invalid_argument(std::string("unknown axis '") + axis + "'");
    }
    return s;
}

struct BathOps {
    long dim = 1;
    std::vector<MatrixXcd> lower;    // per-mode lowering operator on the bath space
    std::vector<MatrixXcd> number;
};

BathOps build_bath_ops(const ExactModelSpec& spec) {
    BathOps ops;
    for (int n : spec.n_max) ops.dim *= n + 1;
    for (size_t k = 0; k < spec.modes.size(); ++k) {
        MatrixXcd op = MatrixXcd::Identity(1, 1);
        for (size_t j = 0; j < spec.modes.size(); ++j) {
            const long d = spec.n_max[j] + 1;
            op = kron(op, j == k ? lowering(spec.n_max[j]) : MatrixXcd::Identity(d, d));
        }
        ops.number.push_back(op.adjoint() * op);
        ops.lower.push_back(std::move(op));
    }
    return ops;
}

// sum_k g_k a_k^dag + conj(g_k) a_k on the bath space
MatrixXcd field_operator(const BathOps& ops, const std::vector<complex<double>>& g) {
    MatrixXcd b = MatrixXcd::Zero(ops.dim, ops.dim);
    for (size_t k = 0; k < g.size(); ++k)
        b += g[k] * ops.lower[k].adjoint() + std::conj(g[k]) * ops.lower[k];
    return b;
}

void validate_spec(const ExactModelSpec& spec) {
    if (spec.modes.size() > 3) throw std::invalid_argument("ExactModel: at most 3 modes");
    if (spec.n_max.size() != spec.modes.size())
        throw std::invalid_argument("ExactModel: one n_max entry per mode");
    for (int n : spec.n_max)
        if (n < 2) throw std::invalid_argument("ExactModel: n_max must be >= 2");
    if (!(spec.temperature >= 0.0))
        throw std::invalid_argument("ExactModel: temperature must be >= 0");
    long dim = 2;
    for (int n : spec.n_max) dim *= n + 1;
    if (dim > kDimensionCap)
        throw std::invalid_argument("ExactModel: Hilbert dimension exceeds cap 4096");
    if (spec.coupling == CouplingKind::General) {
        for (const auto& g : spec.axis_g)
            if (!g.empty() && g.size() != spec.modes.size())
                throw std::invalid_argument("ExactModel: axis_g must have one entry per mode");
    }
}

}  // namespace

ExactModelSpec ExactModelSpec::with_uniform_n_max(int n) const {
    ExactModelSpec out = *this;
    out.n_max.assign(modes.size(), n);
    return out;
}

// ----------------------------- DensityMatrix --------------------------------

double DensityMatrix::trace_deviation() const {
    return std::abs(mat.trace() - complex<double>(1.0));
}

double DensityMatrix::hermiticity_deviation() const {
    return (mat - mat.adjoint()).cwiseAbs().maxCoeff();
}

double DensityMatrix::min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(mat, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

void DensityMatrix::validate(double tol) const {
    if (trace_deviation() > tol) throw std::runtime_error("DensityMatrix: trace deviates from 1");
    if (hermiticity_deviation() > tol) throw std::runtime_error("DensityMatrix: not Hermitian");
    if (min_eigenvalue() < -tol) throw std::runtime_error("DensityMatrix: negative eigenvalue");
}

double extracted_gamma(const std::vector<QubitSample>& samples, size_t index) {
    const double c0 = std::abs(samples.at(0).rho(0, 1));
    const double ct = std::abs(samples.at(index).rho(0, 1));
    if (c0 == 0.0) throw std::invalid_argument("extracted_gamma: initial coherence is zero");
    return -std::log(ct / c0);
}

// ----------------------------- Hamiltonian ----------------------------------

Eigen::MatrixXcd build_hamiltonian(const ExactModelSpec& spec) {
    validate_spec(spec);
    const BathOps ops = build_bath_ops(spec);
    const MatrixXcd eye_b = MatrixXcd::Identity(ops.dim, ops.dim);

    MatrixXcd h = kron(0.5 * spec.omega0 * sigma('z'), eye_b);
    for (size_t k = 0; k < spec.modes.size(); ++k)
        h += kron(sigma('i'), spec.modes[k].omega * ops.number[k]);

    std::vector<complex<double>> mode_g;
    for (const auto& m : spec.modes) mode_g.push_back(m.g);

    switch (spec.coupling) {
        case CouplingKind::Dephasing:
            h += kron(sigma('z'), field_operator(ops, mode_g));
            break;
        case CouplingKind::JaynesCummings: {
            // sum_k g_k b_k^dag sigma_- + h.c.
            Eigen::Matrix2cd lower_q;
            lower_q << 0, 0, 1, 0;
            MatrixXcd raise_b = MatrixXcd::Zero(ops.dim, ops.dim);
            for (size_t k = 0; k < spec.modes.size(); ++k)
                raise_b += spec.modes[k].g * ops.lower[k].adjoint();
            const MatrixXcd term = kron(lower_q, raise_b);
            h += term + term.adjoint();
            break;
        }
        case CouplingKind::General: {
            const char axes[3] = {'x', 'y', 'z'};
            for (int a = 0; a < 3; ++a)
                if (!spec.axis_g[a].empty())
                    h += kron(sigma(axes[a]), field_operator(ops, spec.axis_g[a]));
            break;
        }
    }

    const double dev = (h - h.adjoint()).cwiseAbs().maxCoeff();
    if (dev > kHermTol) throw std::runtime_error("build_hamiltonian: assembled operator not Hermitian");
    return 0.5 * (h + h.adjoint());
}

// ----------------------------- ExactModel -----------------------------------

ExactModel::ExactModel(ExactModelSpec spec) : spec_(std::move(spec)) {
    hamiltonian_ = build_hamiltonian(spec_);
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(hamiltonian_);
    if (es.info() != Eigen::Success) throw std::runtime_error("ExactModel: eigensolver failed");
    evecs_ = es.eigenvectors();
    evals_ = es.eigenvalues();
}

Eigen::Vector2cd ExactModel::plus_state() {
    Eigen::Vector2cd v;
    v << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
    return v;
}

DensityMatrix ExactModel::thermal_state() const {
    MatrixXcd rho = MatrixXcd::Identity(1, 1);
    for (size_t k = 0; k < spec_.modes.size(); ++k) {
        const int levels = spec_.n_max[k] + 1;
        Eigen::VectorXd p(levels);
        if (spec_.temperature == 0.0) {
            p.setZero();
            p(0) = 1.0;
        } else {
            for (int n = 0; n < levels; ++n)
                p(n) = std::exp(-n * spec_.modes[k].omega / spec_.temperature);
            p /= p.sum();
        }
        if (p(levels - 1) > kTopLevelOccupancy)
            throw TruncationError("thermal_state: occupancy of the top Fock level exceeds 1e-6; "
                                  "raise n_max or lower the temperature");
        rho = kron(rho, p.cast<complex<double>>().asDiagonal());
    }
    return DensityMatrix{std::move(rho)};
}

DensityMatrix ExactModel::initial_state(const Eigen::Vector2cd& qubit) const {
    Eigen::Matrix2cd q = qubit * qubit.adjoint();
    q /= q.trace().real();
    return DensityMatrix{kron(q, thermal_state().mat)};
}

DensityMatrix ExactModel::propagate(const DensityMatrix& rho, double tau) const {
    if (!(tau >= 0.0)) throw std::invalid_argument("propagate: tau must be >= 0");
    if (tau == 0.0) return rho;
    const Eigen::VectorXcd phases = (-kI * tau * evals_.array()).exp();
    MatrixXcd a = evecs_.adjoint() * rho.mat * evecs_;
    a = phases.asDiagonal() * a * phases.conjugate().asDiagonal();
    MatrixXcd out = evecs_ * a * evecs_.adjoint();
    return DensityMatrix{0.5 * (out + out.adjoint().eval())};
}

DensityMatrix ExactModel::apply_pulse(const DensityMatrix& rho, char axis, double angle) const {
    const Eigen::Matrix2cd r =
        std::cos(0.5 * angle) * sigma('i') - kI * std::sin(0.5 * angle) * sigma(axis);
    const long d = bath_dimension();
    MatrixXcd out = MatrixXcd::Zero(rho.mat.rows(), rho.mat.cols());
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int q = 0; q < 2; ++q)
                for (int s = 0; s < 2; ++s) {
                    const complex<double> c = r(a, q) * std::conj(r(b, s));
                    if (c != 0.0) out.block(a * d, b * d, d, d) += c * rho.mat.block(q * d, s * d, d, d);
                }
    return DensityMatrix{std::move(out)};
}

Eigen::Matrix2cd ExactModel::partial_trace_qubit(const DensityMatrix& rho) const {
    const long d = bath_dimension();
    Eigen::Matrix2cd out;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) out(a, b) = rho.mat.block(a * d, b * d, d, d).trace();
    return out;
}

std::vector<QubitSample> ExactModel::run_train(const control::PulseTrainSpec& train,
                                               const Eigen::Vector2cd& qubit) const {
    // cycle propagator built once: U = (X U_dt X) U_dt, with X (x) I applied
    // as block swaps
    const Eigen::VectorXcd phases = (-kI * train.delta_t * evals_.array()).exp();
    const MatrixXcd u_dt = evecs_ * phases.asDiagonal() * evecs_.adjoint();
    const long d = bath_dimension();
    MatrixXcd xux(u_dt.rows(), u_dt.cols());
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            xux.block(a * d, b * d, d, d) = u_dt.block((1 - a) * d, (1 - b) * d, d, d);
    const MatrixXcd u_cycle = xux * u_dt;

    DensityMatrix rho = initial_state(qubit);
    std::vector<QubitSample> samples;
    samples.push_back(QubitSample{0.0, partial_trace_qubit(rho)});
    for (int m = 1; m <= train.n_cycles; ++m) {
        rho.mat = u_cycle * rho.mat * u_cycle.adjoint();
        samples.push_back(QubitSample{2.0 * m * train.delta_t, partial_trace_qubit(rho)});
    }
    return samples;
}

std::vector<QubitSample> ExactModel::run_sequence(const pauli::GateSequence& seq, int repetitions,
                                                  const Eigen::Vector2cd& qubit) const {
    seq.validate();
    if (repetitions < 1) throw std::invalid_argument("run_sequence: repetitions must be >= 1");

    DensityMatrix rho = initial_state(qubit);
    std::vector<QubitSample> samples;
    samples.push_back(QubitSample{0.0, partial_trace_qubit(rho)});
    const double cycle = seq.cycle_time();
    for (int rep = 1; rep <= repetitions; ++rep) {
        for (size_t k = 0; k < seq.durations.size(); ++k) {
            const double tau = seq.durations[k].to_double() * seq.base_time;
            if (tau > 0.0) rho = propagate(rho, tau);
            if (k < seq.pulses.size() && seq.pulses[k].letter != pauli::Letter::I) {
                const char axis =
                    static_cast<char>(std::tolower(pauli::letter_char(seq.pulses[k].letter)));
                rho = apply_pulse(rho, axis, std::numbers::pi);
            }
        }
        samples.push_back(QubitSample{rep * cycle, partial_trace_qubit(rho)});
    }
    return samples;
}

ConvergenceReport convergence_scan(const ExactModelSpec& spec, const std::vector<int>& n_max_list,
                                   double t_max, int n_samples) {
    if (n_max_list.size() < 2)
        throw std::invalid_argument("convergence_scan: need at least two truncations");
    if (!(t_max > 0.0) || n_samples < 2)
        throw std::invalid_argument("convergence_scan: bad reference grid");

    ConvergenceReport report;
    std::vector<double> prev;
    for (int n : n_max_list) {
        ExactModel model(spec.with_uniform_n_max(n));
        DensityMatrix rho = model.initial_state();
        std::vector<QubitSample> samples;
        samples.push_back(QubitSample{0.0, model.partial_trace_qubit(rho)});
        const double step = t_max / (n_samples - 1);
        std::vector<double> gammas;
        for (int j = 1; j < n_samples; ++j) {
            rho = model.propagate(rho, step);
            samples.push_back(QubitSample{j * step, model.partial_trace_qubit(rho)});
            gammas.push_back(extracted_gamma(samples, samples.size() - 1));
        }
        double max_delta = 0.0;
        if (!prev.empty())
            for (size_t j = 0; j < gammas.size(); ++j)
                max_delta = std::max(max_delta, std::abs(gammas[j] - prev[j]));
        report.rows.push_back(ConvergenceRow{n, prev.empty() ? 0.0 : max_delta});
        prev = gammas;
    }
    report.pass = report.rows.back().max_delta_gamma < report.threshold;
    return report;
}

}  // namespace qdc::exact
