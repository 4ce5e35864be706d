#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>

#include "srsim/dicke.hpp"
#include "srsim/dynamics.hpp"
#include "srsim/errors.hpp"
#include "srsim/trace.hpp"

using namespace srsim;

namespace {

DensityMatrix pure_density(const StateVector& psi) {
    return psi * psi.adjoint();
}

}  // namespace

TEST_CASE("unitary: eigenvector populations are stationary") {
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(3, 3);
    h(0, 0) = 1.0;
    h(1, 1) = 2.5;
    h(2, 2) = -0.3;
    StateVector psi0 = StateVector::Zero(3);
    psi0(1) = 1.0;
    const auto traj = evolve_unitary(h, psi0, uniform_grid(10.0, 50));
    for (const auto& psi : traj) {
        CHECK(std::abs(psi(1)) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(std::abs(psi.norm() - 1.0) < 1e-10);
    }
}

TEST_CASE("unitary: vacuum Rabi oscillation") {
    ModelParams p;
    p.epsilon = 4.0;
    p.coupling = 0.9;
    const DickeBasis basis{1};
    const FieldMode mode{4, 4.0};
    const Eigen::MatrixXcd h =
        Eigen::MatrixXcd(build_hamiltonian(p, basis, mode)
                             .cast<std::complex<double>>());
    // |excited, 0 photons> -> index spin=1, n=0 -> 1*(4+1)+0
    StateVector psi0 = StateVector::Zero(10);
    psi0(5) = 1.0;
    const auto grid = uniform_grid(2.0 * 3.14159265 / p.coupling, 200);
    const auto traj = evolve_unitary(h, psi0, grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double pe = std::norm(traj[i](5));
        const double expect = std::pow(std::cos(p.coupling * grid[i]), 2);
        CHECK(pe == doctest::Approx(expect).epsilon(1e-8));
    }
}

TEST_CASE("unitary: g = 0 freezes populations") {
    ModelParams p;
    p.epsilon = 4.0;
    p.coupling = 0.0;
    const DickeBasis basis{3};
    const FieldMode mode{2, 4.0};
    const Eigen::MatrixXcd h =
        Eigen::MatrixXcd(build_hamiltonian(p, basis, mode)
                             .cast<std::complex<double>>());
    StateVector psi0 = StateVector::Zero(h.rows());
    psi0(0) = std::sqrt(0.5);
    psi0(4) = std::sqrt(0.5);
    const auto traj = evolve_unitary(h, psi0, uniform_grid(3.0, 20));
    for (const auto& psi : traj) {
        CHECK(std::norm(psi(0)) == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(std::norm(psi(4)) == doctest::Approx(0.5).epsilon(1e-12));
    }
}

TEST_CASE("unitary input validation") {
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(2, 2);
    StateVector bad = StateVector::Zero(3);
    bad(0) = 1.0;
    CHECK_THROWS_AS(evolve_unitary(h, bad, uniform_grid(1.0, 5)), ConfigError);
    StateVector unnorm = StateVector::Zero(2);
    unnorm(0) = 2.0;
    CHECK_THROWS_AS(evolve_unitary(h, unnorm, uniform_grid(1.0, 5)),
                    ConfigError);
}

TEST_CASE("master: closed limit matches unitary evolution") {
    // small Hermitian coupling on the Dicke ladder, all rates zero
    const auto ops = build_collective_operators(2);
    SparseComplex h =
        SparseComplex((ops.j_plus + ops.j_minus).cast<std::complex<double>>());
    LindbladModel model;
    model.dimension = 3;
    model.hamiltonian = h;

    StateVector psi0 = StateVector::Zero(3);
    psi0(2) = 1.0;
    const auto grid = uniform_grid(2.0, 40);
    MasterOptions fine;
    fine.step_safety = 0.005;
    const auto rhos = evolve_master(model, pure_density(psi0), grid, fine);
    const auto psis = evolve_unitary(Eigen::MatrixXcd(h), psi0, grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const DensityMatrix diff = rhos[i] - pure_density(psis[i]);
        // trace distance bound via Frobenius norm
        CHECK(diff.norm() < 1e-8);
    }
}

TEST_CASE("master: single-atom decay is exponential") {
    const auto ops = build_collective_operators(1);
    ModelParams p;
    p.gamma_collective = 1.0;
    const LindbladModel model = collective_model(p, ops);
    const auto grid = uniform_grid(6.0, 120);
    const auto rhos =
        evolve_master(model, pure_density(fully_excited_state(1)), grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        CHECK(std::abs(rhos[i](1, 1).real() - std::exp(-grid[i])) < 1e-6);
    }
}

TEST_CASE("master: pure dephasing decays coherence at gamma_phi/2") {
    const auto ops = build_collective_operators(1);
    ModelParams p;
    p.gamma_dephasing = 0.8;
    const LindbladModel model = collective_model(p, ops);
    const auto obs = trace_operators(ops);
    const DensityMatrix rho0 =
        pure_density(spin_coherent_state(1, 3.14159265 / 2.0));
    const auto grid = uniform_grid(5.0, 100);
    const auto rhos = evolve_master(model, rho0, grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double c = std::abs(expectation(rhos[i], obs.j_plus));
        const double expect = 0.5 * std::exp(-0.4 * grid[i]);
        CHECK(c == doctest::Approx(expect).epsilon(1e-6));
    }
}

TEST_CASE("emission intensity endpoints") {
    const int n = 6;
    const auto ops = build_collective_operators(n);
    const auto obs = trace_operators(ops);
    const double gamma = 2.0;

    CHECK(gamma * expectation_real(pure_density(fully_excited_state(n)),
                                   obs.j_plus_j_minus) ==
          doctest::Approx(gamma * n));
    CHECK(gamma * expectation_real(pure_density(ground_state(n)),
                                   obs.j_plus_j_minus) == doctest::Approx(0.0));

    // maximum over Dicke states at m = 0: j(j+1) = (N/2)(N/2+1)
    StateVector mid = StateVector::Zero(n + 1);
    mid(n / 2) = 1.0;
    CHECK(gamma * expectation_real(pure_density(mid), obs.j_plus_j_minus) ==
          doctest::Approx(gamma * (n / 2.0) * (n / 2.0 + 1.0)));
}

TEST_CASE("master invariants: trace, positivity, bookkeeping") {
    const int n = 8;
    const auto ops = build_collective_operators(n);
    ModelParams p;
    p.gamma_collective = 1.0;
    const LindbladModel model = collective_model(p, ops);
    const auto obs = trace_operators(ops);
    const auto grid = uniform_grid(6.0, 400);
    const auto trace =
        compute_trace(model, obs, pure_density(fully_excited_state(n)), grid,
                      p.gamma_collective);

    for (double te : trace.trace_error) CHECK(te < 1e-8);
    for (double in : trace.intensity) CHECK(in > -1e-8 * n * n);

    // photon bookkeeping: integral of I equals the inversion drop (w = 0)
    double integral = 0.0;
    for (std::size_t i = 1; i < grid.size(); ++i) {
        integral += 0.5 * (trace.intensity[i] + trace.intensity[i - 1]) *
                    (grid[i] - grid[i - 1]);
    }
    const double drop = trace.inversion.front() - trace.inversion.back();
    CHECK(integral == doctest::Approx(drop).epsilon(1e-3 * n / drop));
}

TEST_CASE("master convergence: halving the step barely moves the endpoint") {
    const int n = 6;
    const auto ops = build_collective_operators(n);
    ModelParams p;
    p.gamma_collective = 1.0;
    p.gamma_dephasing = 0.3;
    p.pump_rate = 0.2;
    const LindbladModel model = collective_model(p, ops);
    const DensityMatrix rho0 = pure_density(fully_excited_state(n));
    const auto grid = uniform_grid(3.0, 30);

    MasterOptions coarse;
    MasterOptions fine;
    fine.step_safety = coarse.step_safety / 2.0;
    const auto a = evolve_master(model, rho0, grid, coarse);
    const auto b = evolve_master(model, rho0, grid, fine);
    CHECK((a.back() - b.back()).norm() < 1e-6);
}

TEST_CASE("superradiance cycle") {
    ModelParams p;
    p.gamma_collective = 1.0;

    SUBCASE("no pump decays to the ground state") {
        const auto trace =
            run_superradiance_cycle(p, 4, uniform_grid(10.0, 200));
        CHECK(trace.intensity.back() < 1e-6);
        CHECK(trace.inversion.front() == doctest::Approx(-2.0));
    }

    SUBCASE("strong pump saturates the inversion") {
        p.pump_rate = 200.0;
        const auto trace =
            run_superradiance_cycle(p, 4, uniform_grid(5.0, 100));
        CHECK(trace.inversion.back() == doctest::Approx(2.0).epsilon(0.05));
    }

    SUBCASE("steady state balances pump and emission flux") {
        p.pump_rate = 2.0;
        p.gamma_dephasing = 0.5;
        const int n = 4;
        const auto ops = build_collective_operators(n);
        const LindbladModel model = collective_model(p, ops);
        const auto grid = uniform_grid(20.0, 100);
        const auto rhos =
            evolve_master(model, pure_density(ground_state(n)), grid);
        const auto obs = trace_operators(ops);
        const SparseComplex jm_jp = SparseComplex(
            (ops.j_minus * ops.j_plus).pruned().cast<std::complex<double>>());
        const double emitted =
            p.gamma_collective *
            expectation_real(rhos.back(), obs.j_plus_j_minus);
        const double absorbed =
            p.pump_rate * expectation_real(rhos.back(), jm_jp);
        CHECK(emitted == doctest::Approx(absorbed).epsilon(0.02));
    }
}

TEST_CASE("derive_collective_rate") {
    CHECK(derive_collective_rate(2.0, 4.0, 0.0) ==
          doctest::Approx(4.0 * 4.0 / 4.0));
    CHECK(derive_collective_rate(1.0, 2.0, 3.0) ==
          doctest::Approx(2.0 / 10.0));
    CHECK_THROWS_AS(derive_collective_rate(1.0, 0.0, 0.0), ConfigError);
}
