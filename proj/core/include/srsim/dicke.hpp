#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <complex>

namespace srsim {

using SparseReal = Eigen::SparseMatrix<double>;
using SparseComplex = Eigen::SparseMatrix<std::complex<double>>;

/// The permutation-symmetric (maximal-j) subspace of N spin-1/2 molecules.
/// Basis index i = 0..N corresponds to m = i - j (ascending), i.e. index i
/// has i molecules excited.
struct DickeBasis {
    int n_molecules = 1;

    double j() const { return n_molecules / 2.0; }
    int dimension() const { return n_molecules + 1; }
    double m_value(int index) const { return index - j(); }
};

/// Collective spin matrices on the Dicke ladder. Real matrices; J- = J+^T.
struct CollectiveOperators {
    DickeBasis basis;
    SparseReal j_plus;
    SparseReal j_minus;
    SparseReal j_z;
};

inline constexpr int kDefaultMaxMolecules = 4096;

CollectiveOperators build_collective_operators(
    int n_molecules, int max_molecules = kDefaultMaxMolecules);

/// Physical parameters of the spin-field model, SI/angular-frequency units.
struct ModelParams {
    double epsilon = 0.0;           // two-level splitting, rad/s
    double dipole = 0.0;            // C m
    double mode_frequency = 0.0;    // rad/s
    double mode_volume = 0.0;       // m^3
    double coupling = 0.0;          // rad/s; 0 = derive from the fields above
    double gamma_collective = 0.0;  // 1/s
    double gamma_dephasing = 0.0;   // 1/s
    double pump_rate = 0.0;         // 1/s
};

/// Single-molecule vacuum-field coupling g = (mu/hbar) sqrt(hbar w / 2 e0 V).
double coupling_constant(const ModelParams& params);

/// Truncated photon-number ladder of the retained cavity mode.
struct FieldMode {
    int fock_cutoff = 1;      // highest retained photon number
    double frequency = 0.0;   // rad/s
};

/// Tavis-Cummings Hamiltonian divided by hbar (units rad/s) on the product
/// space Dicke (x) Fock, index = spin_index * (fock_cutoff + 1) + photons:
///   H/hbar = w n + eps J_z + g (a^dag J_- + a J_+)
/// Real symmetric. Conserves photons + J_z + j.
SparseReal build_hamiltonian(const ModelParams& params, const DickeBasis& basis,
                             const FieldMode& mode);

/// photons + J_z + j on the same product space (conserved by the above).
SparseReal excitation_number_operator(const DickeBasis& basis,
                                      const FieldMode& mode);

/// Spin-coherent (tipped Bloch) state on the Dicke ladder; theta is the polar
/// angle from the fully excited pole (theta = 0 -> |j, j>, pi -> |j, -j>).
Eigen::VectorXcd spin_coherent_state(int n_molecules, double theta);

Eigen::VectorXcd ground_state(int n_molecules);
Eigen::VectorXcd fully_excited_state(int n_molecules);

}  // namespace srsim
