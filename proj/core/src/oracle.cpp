#include "srsim/oracle.hpp"

#include <bit>
#include <cmath>
#include <string>
#include <vector>

#include "srsim/errors.hpp"

namespace srsim {

namespace {

void check_oracle_n(int n) {
    if (n < 1 || n > kOracleMaxMolecules) {
        throw ConfigError("oracle supports 1 <= N <= " +
                          std::to_string(kOracleMaxMolecules) + ", got " +
                          std::to_string(n));
    }
}

double binom(int n, int k) {
    return std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
                    std::lgamma(n - k + 1.0));
}

}  // namespace

FullSpaceOperators build_full_operators(int n_molecules) {
    check_oracle_n(n_molecules);
    FullSpaceOperators ops;
    ops.n_molecules = n_molecules;
    const int dim = ops.dimension();

    std::vector<Eigen::Triplet<double>> jp, jz;
    for (int site = 0; site < n_molecules; ++site) {
        const unsigned bit = 1u << site;
        std::vector<Eigen::Triplet<double>> sp, sz;
        for (unsigned x = 0; x < static_cast<unsigned>(dim); ++x) {
            if (!(x & bit)) {
                sp.emplace_back(static_cast<int>(x | bit),
                                static_cast<int>(x), 1.0);
                sz.emplace_back(static_cast<int>(x), static_cast<int>(x),
                                -0.5);
            } else {
                sz.emplace_back(static_cast<int>(x), static_cast<int>(x), 0.5);
            }
        }
        SparseReal plus(dim, dim), z(dim, dim);
        plus.setFromTriplets(sp.begin(), sp.end());
        z.setFromTriplets(sz.begin(), sz.end());
        ops.site_minus.push_back(SparseReal(plus.transpose()));
        ops.site_plus.push_back(std::move(plus));
        ops.site_z.push_back(std::move(z));
        jp.insert(jp.end(), sp.begin(), sp.end());
        jz.insert(jz.end(), sz.begin(), sz.end());
    }
    ops.j_plus.resize(dim, dim);
    ops.j_plus.setFromTriplets(jp.begin(), jp.end());
    ops.j_minus = SparseReal(ops.j_plus.transpose());
    ops.j_z.resize(dim, dim);
    ops.j_z.setFromTriplets(jz.begin(), jz.end());
    return ops;
}

LindbladModel full_collective_model(const ModelParams& params,
                                    const FullSpaceOperators& ops,
                                    bool per_molecule_pump) {
    LindbladModel model;
    model.dimension = ops.dimension();
    model.collective_size = ops.n_molecules;
    model.hamiltonian.resize(model.dimension, model.dimension);
    model.add_channel(ops.j_minus, params.gamma_collective);
    model.add_channel(ops.j_z, params.gamma_dephasing);
    if (per_molecule_pump) {
        for (const auto& sp : ops.site_plus) {
            model.add_channel(sp, params.pump_rate / ops.n_molecules);
        }
    } else {
        model.add_channel(ops.j_plus, params.pump_rate);
    }
    return model;
}

std::vector<DensityMatrix> evolve_full_master(const LindbladModel& model,
                                              const DensityMatrix& rho0,
                                              const std::vector<double>& t_grid,
                                              const MasterOptions& opts) {
    return evolve_master(model, rho0, t_grid, opts);
}

TraceOperators full_trace_operators(const FullSpaceOperators& ops) {
    TraceOperators t;
    t.j_plus = ops.j_plus.cast<std::complex<double>>();
    t.j_z = ops.j_z.cast<std::complex<double>>();
    t.j_plus_j_minus = SparseComplex(
        (ops.j_plus * ops.j_minus).pruned().cast<std::complex<double>>());
    return t;
}

Eigen::VectorXcd dicke_state_in_full(int n_molecules, int n_excited) {
    check_oracle_n(n_molecules);
    if (n_excited < 0 || n_excited > n_molecules) {
        throw ConfigError("n_excited out of range");
    }
    const int dim = 1 << n_molecules;
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(dim);
    const double amp = 1.0 / std::sqrt(binom(n_molecules, n_excited));
    for (unsigned x = 0; x < static_cast<unsigned>(dim); ++x) {
        if (std::popcount(x) == n_excited) {
            psi(x) = amp;
        }
    }
    return psi;
}

Eigen::VectorXcd lift_to_full(const Eigen::VectorXcd& dicke_state) {
    const int n = static_cast<int>(dicke_state.size()) - 1;
    check_oracle_n(n);
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(1 << n);
    for (int k = 0; k <= n; ++k) {
        if (dicke_state(k) != std::complex<double>(0.0, 0.0)) {
            psi += dicke_state(k) * dicke_state_in_full(n, k);
        }
    }
    return psi;
}

SymmetricProjection project_symmetric(const Eigen::VectorXcd& full_state,
                                      int n_molecules) {
    check_oracle_n(n_molecules);
    if (full_state.size() != (1 << n_molecules)) {
        throw ConfigError("state dimension does not match N");
    }
    SymmetricProjection out;
    out.amplitudes = Eigen::VectorXcd::Zero(n_molecules + 1);
    for (int k = 0; k <= n_molecules; ++k) {
        out.amplitudes(k) =
            dicke_state_in_full(n_molecules, k).dot(full_state);
    }
    out.leakage = full_state.squaredNorm() - out.amplitudes.squaredNorm();
    return out;
}

SymmetricDensityProjection project_symmetric_density(
    const DensityMatrix& full_rho, int n_molecules) {
    check_oracle_n(n_molecules);
    const int dim = 1 << n_molecules;
    if (full_rho.rows() != dim || full_rho.cols() != dim) {
        throw ConfigError("density matrix dimension does not match N");
    }
    Eigen::MatrixXcd basis(dim, n_molecules + 1);
    for (int k = 0; k <= n_molecules; ++k) {
        basis.col(k) = dicke_state_in_full(n_molecules, k);
    }
    SymmetricDensityProjection out;
    out.rho = basis.adjoint() * full_rho * basis;
    out.leakage = full_rho.trace().real() - out.rho.trace().real();
    return out;
}

}  // namespace srsim
