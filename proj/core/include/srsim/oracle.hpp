#pragma once

#include <Eigen/Dense>
#include <vector>

#include "srsim/dicke.hpp"
#include "srsim/dynamics.hpp"

namespace srsim {

inline constexpr int kOracleMaxMolecules = 6;

/// Full 2^N tensor-product representation. Basis: bit j of the index is the
/// state of molecule j (1 = excited), so index popcount counts excitations.
struct FullSpaceOperators {
    int n_molecules = 0;
    std::vector<SparseReal> site_plus;
    std::vector<SparseReal> site_minus;
    std::vector<SparseReal> site_z;
    SparseReal j_plus;
    SparseReal j_minus;
    SparseReal j_z;

    int dimension() const { return 1 << n_molecules; }
};

FullSpaceOperators build_full_operators(int n_molecules);

/// Collective-channel Lindblad model on the full space; optionally replaces
/// the collective pump by per-molecule pumping at rate w/N per site.
LindbladModel full_collective_model(const ModelParams& params,
                                    const FullSpaceOperators& ops,
                                    bool per_molecule_pump = false);

std::vector<DensityMatrix> evolve_full_master(
    const LindbladModel& model, const DensityMatrix& rho0,
    const std::vector<double>& t_grid, const MasterOptions& opts = {});

TraceOperators full_trace_operators(const FullSpaceOperators& ops);

/// The Dicke state |j, m = k - j> embedded in the full space.
Eigen::VectorXcd dicke_state_in_full(int n_molecules, int n_excited);

/// Embed a Dicke-ladder state vector into the full space.
Eigen::VectorXcd lift_to_full(const Eigen::VectorXcd& dicke_state);

struct SymmetricProjection {
    Eigen::VectorXcd amplitudes;  // components along the maximal-j multiplet
    double leakage = 0.0;         // probability weight outside it
};

SymmetricProjection project_symmetric(const Eigen::VectorXcd& full_state,
                                      int n_molecules);

struct SymmetricDensityProjection {
    DensityMatrix rho;    // (N+1) x (N+1) block
    double leakage = 0.0; // 1 - trace of the block
};

SymmetricDensityProjection project_symmetric_density(
    const DensityMatrix& full_rho, int n_molecules);

}  // namespace srsim
