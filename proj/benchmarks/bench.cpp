#include <benchmark/benchmark.h>

#include "srsim/dicke.hpp"
#include "srsim/dynamics.hpp"
#include "srsim/oracle.hpp"
#include "srsim/trace.hpp"

using namespace srsim;

namespace {

DensityMatrix pure_density(const Eigen::VectorXcd& psi) {
    return psi * psi.adjoint();
}

void bm_build_operators(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_collective_operators(n));
    }
}
BENCHMARK(bm_build_operators)->Arg(16)->Arg(64)->Arg(256)->Arg(1024);

void bm_master_rhs(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto ops = build_collective_operators(n);
    ModelParams p;
    p.gamma_collective = 1.0;
    p.gamma_dephasing = 0.3;
    p.pump_rate = 0.2;
    const auto model = collective_model(p, ops);
    const DensityMatrix rho = pure_density(spin_coherent_state(n, 0.3));
    for (auto _ : state) {
        benchmark::DoNotOptimize(model.rhs(rho));
    }
}
BENCHMARK(bm_master_rhs)->Arg(16)->Arg(64)->Arg(160);

void bm_burst_trace(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto ops = build_collective_operators(n);
    ModelParams p;
    p.gamma_collective = 1.0;
    const auto model = collective_model(p, ops);
    const auto obs = trace_operators(ops);
    const DensityMatrix rho0 = pure_density(fully_excited_state(n));
    const auto grid = uniform_grid(6.0 / n, 100);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            compute_trace(model, obs, rho0, grid, p.gamma_collective));
    }
}
BENCHMARK(bm_burst_trace)->Arg(16)->Arg(40);

void bm_oracle_rhs(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto ops = build_full_operators(n);
    ModelParams p;
    p.gamma_collective = 1.0;
    p.gamma_dephasing = 0.3;
    p.pump_rate = 0.2;
    const auto model = full_collective_model(p, ops);
    const DensityMatrix rho =
        pure_density(lift_to_full(fully_excited_state(n)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(model.rhs(rho));
    }
}
BENCHMARK(bm_oracle_rhs)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
