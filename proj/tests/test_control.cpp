#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qdc/control.hpp"
#include "qdc/decay.hpp"
#include "qdc/exact.hpp"
#include "qdc/verification.hpp"

using namespace qdc;
using std::numbers::pi;

TEST_CASE("filter factor reference values") {
    CHECK(control::filter_factor(pi / 2.0, 1) == doctest::Approx(2.0).epsilon(1e-14));
    // exact value at the removable singularity, any cycle count
    for (int n : {1, 2, 3, 7}) {
        CHECK(control::filter_factor(pi, n) == doctest::Approx(8.0 * n * n));
        CHECK(control::filter_factor(3.0 * pi, n) == doctest::Approx(8.0 * n * n).epsilon(1e-9));
        CHECK(control::filter_factor(pi + 1e-6, n) == doctest::Approx(8.0 * n * n).epsilon(1e-9));
        CHECK(control::filter_factor(pi - 1e-6, n) == doctest::Approx(8.0 * n * n).epsilon(1e-9));
    }
    // quartic suppression at small theta
    for (int n : {1, 3, 10}) {
        const double theta = 1e-3;
        const double expected = n * n * std::pow(theta, 4) / 2.0;
        CHECK(control::filter_factor(theta, n) == doctest::Approx(expected).epsilon(1e-4));
    }
    CHECK_THROWS_AS(control::filter_factor(1.0, 0), std::invalid_argument);
}

TEST_CASE("filter factor symmetry, periodicity, positivity") {
    std::mt19937 rng(424242);
    std::uniform_real_distribution<double> angle(-10.0, 10.0);
    for (int rep = 0; rep < 1000; ++rep) {
        const double theta = angle(rng);
        for (int n : {1, 2, 5}) {
            const double f = control::filter_factor(theta, n);
            CHECK(f >= 0.0);
            CHECK(control::filter_factor(-theta, n) == doctest::Approx(f).epsilon(1e-12));
            const double shifted = control::filter_factor(theta + 2.0 * pi, n);
            CHECK(shifted == doctest::Approx(f).epsilon(1e-6));
        }
        // N = 1 reduction: F = (1 - cos 2 theta) tan^2(theta/2)
        if (std::abs(std::remainder(theta, pi)) > 1e-3) {
            const double tn = std::tan(0.5 * theta);
            CHECK(control::filter_factor(theta, 1) ==
                  doctest::Approx((1.0 - std::cos(2.0 * theta)) * tn * tn).epsilon(1e-10));
        }
    }
}

TEST_CASE("filter factor is continuous across the guard boundary") {
    const double window = 1e-4;
    for (int n : {1, 2, 5, 20}) {
        for (double pole : {pi, 3.0 * pi}) {
            for (double side : {1.0, -1.0}) {
                const double inside = control::filter_factor(pole + side * (window * 0.999), n);
                const double outside = control::filter_factor(pole + side * (window * 1.001), n);
                CHECK(std::abs(inside - outside) / outside < 1e-8);
            }
        }
    }
}

TEST_CASE("pulsed damping, discrete") {
    using bath::Mode;
    // forced composition: weight 1 times F(pi/2, 1) = 2
    std::vector<Mode> one = {Mode(1.0, 0.5)};
    CHECK(control::gamma_pulsed_discrete(one, 0.0, control::PulseTrainSpec(pi / 2.0, 1)) ==
          doctest::Approx(2.0).epsilon(1e-14));

    // continuous-flipping limit: with theta_max = 1e-4 the suppression ratio
    // per mode is tan^2(theta/2) <= 2.5e-9
    std::vector<Mode> two = {Mode(1.0, 0.5), Mode(2.0, 0.3)};
    const double temperature = 1.0;
    const double dt = 1e-4 / 2.0;
    for (int n : {1, 3, 9}) {
        const control::PulseTrainSpec train(dt, n);
        const double pulsed = control::gamma_pulsed_discrete(two, temperature, train);
        const double free_damping = decay::gamma0_discrete(two, temperature, train.end_time());
        CHECK(pulsed < 1e-6 * free_damping);
    }
}

TEST_CASE("pulsed damping matches the exact engine on a two-mode bath") {
    exact::ExactModelSpec spec;
    spec.modes = {bath::Mode(1.0, 0.35), bath::Mode(2.2, 0.2)};
    spec.n_max = {12, 8};
    spec.temperature = 0.0;
    exact::ExactModel model(spec);
    const auto runs = verify::compare_pulsed(model, {0.3}, 3);
    CHECK(runs.at(0).max_error < 1e-4);
}

TEST_CASE("interference form: exact identity at N = 1, breakdown beyond") {
    using bath::Mode;
    std::mt19937 rng(90210);
    std::uniform_real_distribution<double> omega(0.1, 10.0);
    std::uniform_real_distribution<double> coupling(0.05, 1.0);
    std::uniform_real_distribution<double> spacing(0.01, 3.0);
    std::uniform_real_distribution<double> temp(0.0, 5.0);
    int tested = 0;
    while (tested < 1000) {
        const double w = omega(rng);
        const double dt = spacing(rng);
        if (std::abs(std::remainder(w * dt, pi)) < 1e-2) continue;
        std::vector<Mode> m = {Mode(w, coupling(rng))};
        const double temperature = temp(rng);
        const control::PulseTrainSpec train(dt, 1);
        const double stable = control::gamma_pulsed_discrete(m, temperature, train);
        const double printed = control::gamma_pulsed_interference(m, temperature, train);
        CHECK(std::abs(printed - stable) <= 1e-12 * std::max(1.0, stable));
        ++tested;
    }

    // at N >= 2 the interference form no longer vanishes as theta -> 0
    std::vector<Mode> m = {Mode(1.0, 0.5)};
    const control::PulseTrainSpec two(1e-4, 2);
    const double per_mode_free = decay::gamma0_discrete(m, 0.0, two.end_time());
    const double printed2 = control::gamma_pulsed_interference(m, 0.0, two);
    CHECK(printed2 / per_mode_free == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(control::gamma_pulsed_discrete(m, 0.0, two) < 1e-6 * printed2);

    CHECK_THROWS_AS(control::gamma_pulsed_interference(m, 0.0, control::PulseTrainSpec(pi, 1)),
                    std::domain_error);
}

TEST_CASE("per-cycle factorization at N = 1") {
    using bath::Mode;
    std::vector<Mode> modes = {Mode(0.8, 0.5), Mode(1.7, {0.2, 0.3})};
    const double temperature = 0.6;
    for (double dt : {0.1, 0.7, 2.0}) {
        double expected = 0.0;
        for (const auto& m : modes) {
            const double theta = m.omega * dt;
            const double s = std::sin(0.5 * m.omega * 2.0 * dt);
            const double mode_free = 8.0 * std::norm(m.g) *
                                     bath::coth_half(m.omega, temperature) * s * s /
                                     (m.omega * m.omega);
            expected += mode_free * std::tan(0.5 * theta) * std::tan(0.5 * theta);
        }
        const double got =
            control::gamma_pulsed_discrete(modes, temperature, control::PulseTrainSpec(dt, 1));
        CHECK(got == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("quadratic suppression at fixed end time") {
    using bath::Mode;
    std::vector<Mode> modes = {Mode(1.0, 0.4), Mode(2.5, 0.3)};
    auto spec = bath::BathSpec::discrete(modes, 1.2);
    const double t_end = 8.0;
    std::vector<double> dts, gammas;
    for (int n : {40, 57, 80, 113, 160, 226, 320}) {   // omega_max * dt <= 0.25
        const double dt = t_end / (2.0 * n);
        dts.push_back(dt);
        gammas.push_back(control::gamma_pulsed(spec, control::PulseTrainSpec(dt, n)));
    }
    const double slope = verify::fit_loglog_slope(dts, gammas);
    CHECK(slope == doctest::Approx(2.0).epsilon(0.05));
}

TEST_CASE("stroboscopic series") {
    auto spec = bath::BathSpec::ohmic(0.04, 100.0, 1.0e4);
    auto curve = control::stroboscopic_series(spec, 1e-3, 6);
    REQUIRE(curve.samples.size() == 7);
    CHECK(curve.samples[0].t == 0.0);
    CHECK(curve.samples[0].coherence == 1.0);
    const double first = control::gamma_pulsed(spec, control::PulseTrainSpec(1e-3, 1));
    CHECK(curve.samples[1].gamma == doctest::Approx(first).epsilon(1e-12));
    CHECK(curve.samples[1].t == doctest::Approx(2e-3));

    // resonant single mode: the pole value 8 N^2 makes gamma grow as N^2
    auto resonant = bath::BathSpec::discrete({bath::Mode(1.0, 0.3)}, 0.0);
    auto series = control::stroboscopic_series(resonant, pi, 5);
    for (int n = 1; n <= 5; ++n)
        CHECK(series.samples[n].gamma / series.samples[1].gamma ==
              doctest::Approx(static_cast<double>(n) * n).epsilon(1e-10));
    CHECK(series.samples[5].coherence < series.samples[1].coherence);

    CHECK_THROWS_AS(control::stroboscopic_series(spec, 1e-3, 0), std::invalid_argument);
}

TEST_CASE("echo gain") {
    auto high = bath::BathSpec::ohmic(0.25, 100.0, 1.0e4);
    const double tau_c = bath::correlation_time(high);
    const double t = 20.0 * tau_c;

    // pulsing much faster than the bath recovers nearly all coherence
    const double gain = control::echo_gain(high, t, tau_c / 100.0);
    const double free_damping = decay::gamma0(high, t);
    CHECK(gain > 0.999 * free_damping);

    // resonant discrete bath: pulsing accelerates decoherence (negative gain)
    auto resonant = bath::BathSpec::discrete({bath::Mode(1.0, 0.3)}, 0.0);
    CHECK(control::echo_gain(resonant, 2.0 * pi * 3.0, pi) < 0.0);

    // one cycle, one mode, small theta: closed form Gamma_0(2dt) (1 - tan^2(theta/2)) > 0
    auto single = bath::BathSpec::discrete({bath::Mode(1.0, 0.5)}, 0.0);
    const double dt = 0.2;
    const double g0 = decay::gamma0(single, 2.0 * dt);
    const double tn = std::tan(0.5 * dt * 1.0);
    CHECK(control::echo_gain(single, 2.0 * dt, dt) ==
          doctest::Approx(g0 * (1.0 - tn * tn)).epsilon(1e-12));

    CHECK_THROWS_AS(control::echo_gain(high, 0.05, 0.02), std::invalid_argument);
    CHECK_THROWS_AS(control::echo_gain(high, -0.2, 0.1), std::invalid_argument);
}

TEST_CASE("large spacing loses the echo") {
    auto high = bath::BathSpec::ohmic(0.25, 100.0, 1.0e4);
    const double tau_c = bath::correlation_time(high);
    const double dt = 20.0 * tau_c;
    const double pulsed = control::gamma_pulsed(high, control::PulseTrainSpec(dt, 1));
    const double free_damping = decay::gamma0(high, 2.0 * dt);
    CHECK(pulsed > 0.5 * free_damping);
}
