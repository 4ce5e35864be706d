#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "srsim/dicke.hpp"
#include "srsim/trace.hpp"

namespace srsim {

using DensityMatrix = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;

/// Lindblad generator: H plus a list of (jump operator, rate) channels.
/// The Hamiltonian is in angular-frequency units (H/hbar).
struct LindbladModel {
    struct Channel {
        SparseComplex op;
        SparseComplex op_dag;
        SparseComplex op_dag_op;
        double rate = 0.0;
    };

    SparseComplex hamiltonian;  // may be empty (rotating frame)
    std::vector<Channel> channels;
    int dimension = 0;
    // Physical ladder size N; the step heuristic uses rate * N. Defaults to
    // dimension - 1 when unset (full-space models must set it: there the
    // matrix dimension is 2^N, not N).
    int collective_size = 0;

    void add_channel(const SparseReal& op, double rate);
    void add_channel(const SparseComplex& op, double rate);

    /// d rho / dt. Requires Hermitian rho (density matrices always are;
    /// RK4 stages preserve Hermiticity).
    DensityMatrix rhs(const DensityMatrix& rho) const;

    /// Largest rate * dimension-scale product; sets the integrator step.
    double rate_scale() const;

    /// Stiffest Liouvillian eigenvalue estimate; bounds the stable step.
    double stiffness() const;
};

/// Collective open-system model on the Dicke ladder, in the frame rotating
/// at the splitting (the eps J_z term commutes with every channel, so it
/// only rotates the phase of <J+>; |<J+>|, <J_z> and the intensity are
/// frame-independent).
LindbladModel collective_model(const ModelParams& params,
                               const CollectiveOperators& ops);

struct MasterOptions {
    double step_safety = 0.01;   // internal dt = step_safety / rate_scale
    double trace_tol = 1e-8;
    double positivity_tol = 1e-8;
    int positivity_checks = 16;  // eigenvalue checks spread over the grid
    int max_refinements = 4;     // step halvings on invariant violation
};

/// Fixed-step RK4 master-equation integration, observing rho at each grid
/// time. Throws NumericError when an invariant cannot be restored by step
/// refinement.
void evolve_master_observe(
    const LindbladModel& model, const DensityMatrix& rho0,
    const std::vector<double>& t_grid, const MasterOptions& opts,
    const std::function<void(std::size_t, double, const DensityMatrix&)>&
        observer);

/// Convenience: full trajectory (small systems / tests only).
std::vector<DensityMatrix> evolve_master(const LindbladModel& model,
                                         const DensityMatrix& rho0,
                                         const std::vector<double>& t_grid,
                                         const MasterOptions& opts = {});

/// Observables needed for an EmissionTrace, as sparse matrices.
struct TraceOperators {
    SparseComplex j_plus_j_minus;
    SparseComplex j_plus;
    SparseComplex j_z;
};

TraceOperators trace_operators(const CollectiveOperators& ops);

/// Integrate and record observables without storing states.
EmissionTrace compute_trace(const LindbladModel& model,
                            const TraceOperators& obs,
                            const DensityMatrix& rho0,
                            const std::vector<double>& t_grid, double gamma,
                            const MasterOptions& opts = {});

/// Unitary evolution by exact eigendecomposition of a Hermitian H (rad/s).
std::vector<StateVector> evolve_unitary(const Eigen::MatrixXcd& hamiltonian,
                                        const StateVector& psi0,
                                        const std::vector<double>& t_grid);

/// I(t) = gamma * Tr(rho J+ J-) for a stored trajectory.
std::vector<double> emission_intensity(
    const std::vector<DensityMatrix>& trajectory, const SparseComplex& jp_jm,
    double gamma);

/// Full cycle: ground state, collective decay + dephasing + pumping.
EmissionTrace run_superradiance_cycle(const ModelParams& params,
                                      int n_molecules,
                                      const std::vector<double>& t_grid,
                                      const MasterOptions& opts = {});

/// Bad-cavity adiabatic elimination: gamma = g^2 kappa / (delta^2 + kappa^2/4).
double derive_collective_rate(double coupling, double cavity_linewidth,
                              double detuning);

double expectation_real(const DensityMatrix& rho, const SparseComplex& op);
std::complex<double> expectation(const DensityMatrix& rho,
                                 const SparseComplex& op);

}  // namespace srsim
