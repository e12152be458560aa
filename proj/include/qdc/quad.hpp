// quad.hpp — Adaptive Gauss-Kronrod quadrature for the decoherence integrals:
// bisection on a fixed 7/15 nested rule, breakpoint-aware splitting, and the
// analytic cutoff used to truncate the semi-infinite frequency integrals.

#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "qdc/bath.hpp"

namespace qdc::quad {

struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;   // >= 0
    long evaluations = 0;          // > 0
};

struct QuadError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Evaluation cap reached with the error estimate still above tolerance.
struct QuadNonConvergence : QuadError {
    using QuadError::QuadError;
};

// NaN or infinity encountered in the integrand.
struct QuadDomainError : QuadError {
    using QuadError::QuadError;
};

using Integrand = std::function<double(double)>;

inline constexpr long kEvaluationCap = 1'000'000;
inline constexpr double kDefaultTol = 1e-9;

// Adaptive bisection with the nested G7/K15 rule. Converged when the summed
// error estimate is below max(tol*|value|, 1e-14*(b-a)*max sampled |f|).
QuadResult integrate(const Integrand& f, double a, double b, double tol = kDefaultTol);

// Integrates each subinterval between consecutive breakpoints independently
// and sums values and error estimates. Breakpoints must be sorted and
// strictly inside (a, b).
QuadResult integrate_with_breakpoints(const Integrand& f, double a, double b,
                                      const std::vector<double>& breakpoints,
                                      double tol = kDefaultTol);

// Truncation frequency for the semi-infinite Ohmic integrals: the exponential
// cutoff in I(w) bounds the tail of I(w)*4*coth(w/2T)/w^2 below eps times the
// integral's small-w scale once w_max = omega_c * max(35, ln(1/eps) + 2 ln ln(1/eps) + 10).
double upper_cutoff(const bath::BathSpec& spec, double eps);

}  // namespace qdc::quad
