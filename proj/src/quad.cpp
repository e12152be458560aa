#include "qdc/quad.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

namespace qdc::quad {

namespace {

// Kronrod 15 abscissae on [0,1] (symmetric) and weights; odd entries carry the
// embedded Gauss-7 weights. Standard QUADPACK constants.
constexpr int kNodes = 8;
constexpr double xgk[kNodes] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691, 0.7415311855993944,
    0.5860872354676911, 0.4058451513773972, 0.2077849550078985, 0.0};
constexpr double wgk[kNodes] = {
    0.02293532201052922, 0.06309209262997855, 0.1047900103222502, 0.1406532597155259,
    0.1690047266392679, 0.1903505780647854, 0.2044329400752989, 0.2094821410847278};
constexpr double wg[4] = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189, 0.4179591836734694};

struct Interval {
    double a, b;
    double value;    // K15 estimate
    double error;    // QUADPACK-style error estimate
};

struct WorstFirst {
    bool operator()(const Interval& lhs, const Interval& rhs) const {
        if (lhs.error != rhs.error) return lhs.error < rhs.error;
        return lhs.a > rhs.a;   // deterministic tie-break
    }
};

struct RuleState {
    long evaluations = 0;
    double max_abs_f = 0.0;
};

Interval apply_rule(const Integrand& f, double a, double b, RuleState& state) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    double fv[2 * kNodes - 1];
    auto eval = [&](double x) {
        const double y = f(x);
        if (!std::isfinite(y)) throw QuadDomainError("integrate: non-finite integrand value");
        state.max_abs_f = std::max(state.max_abs_f, std::abs(y));
        ++state.evaluations;
        return y;
    };

    const double fc = eval(center);
    double resk = wgk[kNodes - 1] * fc;
    double resg = wg[3] * fc;
    double resabs = wgk[kNodes - 1] * std::abs(fc);
    fv[kNodes - 1] = fc;
    for (int i = 0; i < kNodes - 1; ++i) {
        const double dx = half * xgk[i];
        const double f1 = eval(center - dx);
        const double f2 = eval(center + dx);
        fv[i] = f1;
        fv[2 * kNodes - 2 - i] = f2;
        resk += wgk[i] * (f1 + f2);
        resabs += wgk[i] * (std::abs(f1) + std::abs(f2));
        if (i % 2 == 1) resg += wg[i / 2] * (f1 + f2);
    }

    const double mean = 0.5 * resk;
    double resasc = wgk[kNodes - 1] * std::abs(fc - mean);
    for (int i = 0; i < kNodes - 1; ++i)
        resasc += wgk[i] * (std::abs(fv[i] - mean) + std::abs(fv[2 * kNodes - 2 - i] - mean));

    const double value = resk * half;
    resabs *= std::abs(half);
    resasc *= std::abs(half);
    double err = std::abs((resk - resg) * half);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double eps = std::numeric_limits<double>::epsilon();
    const double tiny = std::numeric_limits<double>::min();
    if (resabs > tiny / (50.0 * eps)) err = std::max(err, 50.0 * eps * resabs);
    return Interval{a, b, value, err};
}

}  // namespace

QuadResult integrate(const Integrand& f, double a, double b, double tol) {
    if (!(a < b)) throw std::invalid_argument("integrate: requires a < b");
    if (!(tol > 0.0) || tol > 1e-2) throw std::invalid_argument("integrate: tol must be in (0, 1e-2]");

    RuleState state;
    std::priority_queue<Interval, std::vector<Interval>, WorstFirst> heap;
    Interval whole = apply_rule(f, a, b, state);
    double total_value = whole.value;
    double total_error = whole.error;
    heap.push(whole);

    const double min_width = 16.0 * std::numeric_limits<double>::epsilon() *
                             std::max(std::abs(a), std::abs(b));
    double frozen_error = 0.0;   // intervals too narrow to split further

    while (true) {
        const double tol_abs = 1e-14 * (b - a) * state.max_abs_f;
        const double target = std::max(tol * std::abs(total_value), tol_abs);
        if (total_error <= target) break;
        if (heap.empty()) break;
        if (state.evaluations + 30 > kEvaluationCap)
            throw QuadNonConvergence("integrate: evaluation cap reached before convergence");

        Interval worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (worst.b - worst.a < min_width || mid <= worst.a || mid >= worst.b) {
            // cannot be refined further; keep its contribution and move on
            frozen_error += worst.error;
            total_error -= worst.error;
            if (heap.empty() && frozen_error + total_error > target)
                throw QuadNonConvergence("integrate: interval width limit reached before convergence");
            continue;
        }
        Interval left = apply_rule(f, worst.a, mid, state);
        Interval right = apply_rule(f, mid, worst.b, state);
        total_value += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }

    return QuadResult{total_value, total_error + frozen_error, state.evaluations};
}

QuadResult integrate_with_breakpoints(const Integrand& f, double a, double b,
                                      const std::vector<double>& breakpoints, double tol) {
    if (!(a < b)) throw std::invalid_argument("integrate_with_breakpoints: requires a < b");
    double prev = a;
    for (double x : breakpoints) {
        if (!(x > a && x < b)) throw std::invalid_argument(
            "integrate_with_breakpoints: breakpoints must lie strictly inside (a, b)");
        if (!(x > prev)) throw std::invalid_argument(
            "integrate_with_breakpoints: breakpoints must be strictly sorted");
        prev = x;
    }

    QuadResult total;
    double lo = a;
    auto accumulate = [&](double hi) {
        QuadResult part = integrate(f, lo, hi, tol);
        total.value += part.value;
        total.error_estimate += part.error_estimate;
        total.evaluations += part.evaluations;
        lo = hi;
    };
    for (double x : breakpoints) accumulate(x);
    accumulate(b);
    return total;
}

double upper_cutoff(const bath::BathSpec& spec, double eps) {
    if (!(eps > 0.0) || eps > 1e-3) throw std::invalid_argument("upper_cutoff: eps must be in (0, 1e-3]");
    const double omega_c = spec.continuum().omega_c;
    const double l = std::log(1.0 / eps);
    return omega_c * std::max(35.0, l + 2.0 * std::log(l) + 10.0);
}

}  // namespace qdc::quad
