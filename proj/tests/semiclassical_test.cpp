#include <doctest.h>

#include <cmath>

#include "srsim/errors.hpp"
#include "srsim/semiclassical.hpp"
#include "srsim/trace.hpp"

using namespace srsim;

TEST_CASE("sech2 pulse peaks at N^2 g / 4 and is symmetric") {
    SemiclassicalParams p;
    p.n_molecules = 400;
    p.gamma = 2.0;
    const double rate = p.n_molecules * p.gamma;
    const double t_delay = std::log(400.0) / rate;

    std::vector<double> grid;
    for (int k = -50; k <= 50; ++k) {
        grid.push_back(t_delay + k * (4.0 / rate) / 50.0);
    }
    const auto trace = sech2_pulse(p, grid);

    const double peak = 0.25 * 400.0 * 400.0 * 2.0;
    CHECK(trace.intensity[50] == doctest::Approx(peak).epsilon(1e-12));
    for (int k = 1; k <= 50; ++k) {
        CHECK(trace.intensity[50 - k] ==
              doctest::Approx(trace.intensity[50 + k]).epsilon(1e-9));
    }
}

TEST_CASE("sech2 pulse emits N photons") {
    SemiclassicalParams p;
    p.n_molecules = 500;
    p.gamma = 1.0;
    const double rate = p.n_molecules * p.gamma;
    const auto grid = uniform_grid(40.0 / rate + std::log(500.0) / rate, 4000);
    const auto trace = sech2_pulse(p, grid);
    double integral = 0.0;
    for (std::size_t i = 1; i < grid.size(); ++i) {
        integral += 0.5 * (trace.intensity[i] + trace.intensity[i - 1]) *
                    (grid[i] - grid[i - 1]);
    }
    CHECK(integral == doctest::Approx(500.0).epsilon(0.02));
}

TEST_CASE("bloch ODE fixed points and limits") {
    SemiclassicalParams p;
    p.n_molecules = 50;
    p.gamma = 1.0;

    SUBCASE("theta0 = pi stays put") {
        p.initial_tipping_angle = 3.14159265358979323846;
        const auto trace = bloch_ode(p, uniform_grid(1.0, 50));
        for (double i : trace.intensity) CHECK(std::abs(i) < 1e-12);
        CHECK(trace.inversion.back() ==
              doctest::Approx(-25.0).epsilon(1e-9));
    }

    SUBCASE("theta0 = pi/2 starts at full intensity") {
        p.initial_tipping_angle = 3.14159265358979323846 / 2.0;
        const auto trace = bloch_ode(p, uniform_grid(1.0, 50));
        CHECK(trace.intensity.front() ==
              doctest::Approx(0.25 * 50.0 * 50.0).epsilon(1e-12));
    }

    SUBCASE("theta0 = 0 is rejected") {
        p.initial_tipping_angle = 0.0;
        CHECK_THROWS_AS(bloch_ode(p, uniform_grid(1.0, 50)), ConfigError);
    }
}

TEST_CASE("bloch ODE peak time matches ln(N)/(N g)") {
    for (double n : {1000.0, 10000.0}) {
        SemiclassicalParams p;
        p.n_molecules = n;
        p.gamma = 1.0;
        const double t_delay = std::log(n) / n;
        const auto grid = uniform_grid(3.0 * t_delay, 3000);
        const auto trace = bloch_ode(p, grid);
        const auto m = pulse_metrics(trace);
        CHECK(m.delay_time == doctest::Approx(t_delay).epsilon(0.05));
        CHECK(m.peak_intensity == doctest::Approx(0.25 * n * n).epsilon(1e-4));
    }
}

TEST_CASE("bloch ODE angle increases monotonically toward pi") {
    SemiclassicalParams p;
    p.n_molecules = 30;
    p.gamma = 1.0;
    p.initial_tipping_angle = 0.3;
    const auto trace = bloch_ode(p, uniform_grid(2.0, 300));
    // inversion j cos(theta) must decrease monotonically to -j
    for (std::size_t i = 1; i < trace.inversion.size(); ++i) {
        CHECK(trace.inversion[i] <= trace.inversion[i - 1] + 1e-12);
    }
    CHECK(trace.inversion.back() == doctest::Approx(-15.0).epsilon(1e-6));
}

TEST_CASE("bloch ODE agrees with the closed form at the peak") {
    SemiclassicalParams p;
    p.n_molecules = 2000.0;
    p.gamma = 1.0;
    p.initial_tipping_angle = 2.0 / std::sqrt(2000.0);
    const double rate = p.n_molecules * p.gamma;
    const auto grid = uniform_grid(3.0 * std::log(2000.0) / rate, 2000);
    const auto ode = bloch_ode(p, grid);
    const auto closed = sech2_pulse(p, grid);
    const auto m_ode = pulse_metrics(ode);
    const auto m_closed = pulse_metrics(closed);
    CHECK(m_ode.peak_intensity ==
          doctest::Approx(m_closed.peak_intensity).epsilon(1e-6));
}

TEST_CASE("parameter validation") {
    SemiclassicalParams p;
    p.n_molecules = 0.5;
    p.gamma = 1.0;
    CHECK_THROWS_AS(p.validate(), ConfigError);
    p.n_molecules = 10;
    p.gamma = -1.0;
    CHECK_THROWS_AS(p.validate(), ConfigError);
    p.gamma = 1.0;
    p.initial_tipping_angle = 4.0;  // > pi
    CHECK_THROWS_AS(p.validate(), ConfigError);
}
