#include "srsim/dynamics.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <string>

#include "srsim/errors.hpp"

namespace srsim {

namespace {

using Complex = std::complex<double>;
constexpr Complex kImag{0.0, 1.0};

double max_abs_coeff(const SparseComplex& m) {
    double mx = 0.0;
    for (int k = 0; k < m.outerSize(); ++k) {
        for (SparseComplex::InnerIterator it(m, k); it; ++it) {
            mx = std::max(mx, std::abs(it.value()));
        }
    }
    return mx;
}

void check_grid(const std::vector<double>& t_grid) {
    if (t_grid.empty()) {
        throw ConfigError("empty time grid");
    }
    for (std::size_t i = 1; i < t_grid.size(); ++i) {
        if (!(t_grid[i] > t_grid[i - 1])) {
            throw ConfigError("time grid must be strictly increasing");
        }
    }
}

// One classical RK4 step of size h. The exact state is Hermitian, so the
// anti-Hermitian roundoff component is projected out after each step; the
// generator does not damp it, and under pumping it can otherwise grow.
void rk4_step(const LindbladModel& model, DensityMatrix& rho, double h) {
    const DensityMatrix k1 = model.rhs(rho);
    const DensityMatrix k2 = model.rhs(rho + (0.5 * h) * k1);
    const DensityMatrix k3 = model.rhs(rho + (0.5 * h) * k2);
    const DensityMatrix k4 = model.rhs(rho + h * k3);
    rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    rho = 0.5 * (rho + rho.adjoint().eval());
}

double hermiticity_defect(const DensityMatrix& rho) {
    return (rho - rho.adjoint()).cwiseAbs().maxCoeff();
}

std::string format_sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", x);
    return buf;
}

double min_eigenvalue(const DensityMatrix& rho) {
    DensityMatrix sym = 0.5 * (rho + rho.adjoint());
    Eigen::SelfAdjointEigenSolver<DensityMatrix> es(sym,
                                                    Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

}  // namespace

void LindbladModel::add_channel(const SparseComplex& op, double rate) {
    if (rate < 0.0) {
        throw ConfigError("channel rate must be >= 0");
    }
    Channel c;
    c.op = op;
    c.op_dag = op.adjoint();
    c.op_dag_op = (c.op_dag * op).pruned();
    c.rate = rate;
    dimension = static_cast<int>(op.rows());
    channels.push_back(std::move(c));
}

void LindbladModel::add_channel(const SparseReal& op, double rate) {
    add_channel(SparseComplex(op.cast<Complex>()), rate);
}

DensityMatrix LindbladModel::rhs(const DensityMatrix& rho) const {
    // Exploits Hermiticity of rho (and H): rho H = (H rho)^dag, and
    // L rho L^dag = (L (L rho)^dag)^dag, so every product is sparse-times-
    // dense with the sparse factor on the left.
    DensityMatrix acc = DensityMatrix::Zero(rho.rows(), rho.cols());
    if (hamiltonian.nonZeros() > 0) {
        const DensityMatrix hrho = hamiltonian * rho;
        acc.noalias() -= kImag * hrho;
        acc.noalias() += kImag * hrho.adjoint();
    }
    for (const auto& c : channels) {
        if (c.rate == 0.0) continue;
        const DensityMatrix lrho = c.op * rho;
        acc.noalias() += c.rate * (c.op * lrho.adjoint()).adjoint();
        const DensityMatrix ldag_lrho = c.op_dag * lrho;
        acc.noalias() -= (0.5 * c.rate) * ldag_lrho;
        acc.noalias() -= (0.5 * c.rate) * ldag_lrho.adjoint();
    }
    return acc;
}

double LindbladModel::rate_scale() const {
    // Fastest collective relaxation rate: channel rate times the ladder size.
    const int ladder =
        collective_size > 0 ? collective_size : std::max(1, dimension - 1);
    double scale = 0.0;
    for (const auto& c : channels) {
        scale += c.rate * ladder;
    }
    if (hamiltonian.nonZeros() > 0) {
        scale += max_abs_coeff(hamiltonian);
    }
    return scale;
}

double LindbladModel::stiffness() const {
    // Stiffest Liouvillian eigenvalue, ~ rate * max diag(L^dag L).
    double s = 0.0;
    for (const auto& c : channels) {
        s += c.rate * max_abs_coeff(c.op_dag_op);
    }
    if (hamiltonian.nonZeros() > 0) {
        s += 2.0 * max_abs_coeff(hamiltonian);
    }
    return s;
}

LindbladModel collective_model(const ModelParams& params,
                               const CollectiveOperators& ops) {
    if (params.gamma_collective < 0.0 || params.gamma_dephasing < 0.0 ||
        params.pump_rate < 0.0) {
        throw ConfigError("rates must be >= 0");
    }
    LindbladModel model;
    model.dimension = ops.basis.dimension();
    model.collective_size = ops.basis.n_molecules;
    model.hamiltonian.resize(model.dimension, model.dimension);
    model.add_channel(ops.j_minus, params.gamma_collective);
    model.add_channel(ops.j_z, params.gamma_dephasing);
    model.add_channel(ops.j_plus, params.pump_rate);
    return model;
}

void evolve_master_observe(
    const LindbladModel& model, const DensityMatrix& rho0,
    const std::vector<double>& t_grid, const MasterOptions& opts,
    const std::function<void(std::size_t, double, const DensityMatrix&)>&
        observer) {
    check_grid(t_grid);
    if (rho0.rows() != model.dimension || rho0.cols() != model.dimension) {
        throw ConfigError("initial state dimension does not match the model");
    }
    if (std::abs(rho0.trace().real() - 1.0) > 1e-6) {
        throw ConfigError("initial state is not trace normalized");
    }

    const double scale = model.rate_scale();
    double dt_target =
        scale > 0.0 ? opts.step_safety / scale
                    : t_grid.back() - t_grid.front();
    // Keep RK4 inside its stability region (boundary ~2.78/|lambda|).
    const double stiff = model.stiffness();
    if (stiff > 0.0) {
        dt_target = std::min(dt_target, 2.0 / stiff);
    }

    const std::size_t n = t_grid.size();
    const std::size_t check_stride =
        std::max<std::size_t>(1, n / std::max(1, opts.positivity_checks));

    DensityMatrix rho = rho0;
    observer(0, t_grid[0], rho);

    for (std::size_t i = 1; i < n; ++i) {
        const double span = t_grid[i] - t_grid[i - 1];
        const DensityMatrix saved = rho;
        int refinement = 0;
        for (;;) {
            const long long nsub = std::max<long long>(
                1, static_cast<long long>(
                       std::ceil(span / dt_target * (1 << refinement))));
            const double h = span / static_cast<double>(nsub);
            rho = saved;
            for (long long s = 0; s < nsub; ++s) {
                rk4_step(model, rho, h);
            }

            const double trace_defect = std::abs(rho.trace().real() - 1.0);
            std::string what;
            if (!rho.allFinite()) {
                what = "non-finite entries";
            } else if (trace_defect > opts.trace_tol) {
                what = "trace defect " + format_sci(trace_defect);
            } else if (hermiticity_defect(rho) > 1e-6) {
                what = "hermiticity defect " +
                       format_sci(hermiticity_defect(rho));
            } else if (i % check_stride == 0 || i + 1 == n) {
                const double lam = min_eigenvalue(rho);
                if (lam < -opts.positivity_tol) {
                    what = "eigenvalue " + format_sci(lam);
                }
            }
            if (what.empty()) break;
            if (++refinement > opts.max_refinements) {
                throw NumericError(
                    "master-equation invariant violation at t = " +
                    std::to_string(t_grid[i]) + " (step " + format_sci(h) +
                    ", " + what + ")");
            }
        }
        observer(i, t_grid[i], rho);
    }
}

std::vector<DensityMatrix> evolve_master(const LindbladModel& model,
                                         const DensityMatrix& rho0,
                                         const std::vector<double>& t_grid,
                                         const MasterOptions& opts) {
    std::vector<DensityMatrix> out;
    out.reserve(t_grid.size());
    evolve_master_observe(model, rho0, t_grid, opts,
                          [&](std::size_t, double, const DensityMatrix& rho) {
                              out.push_back(rho);
                          });
    return out;
}

TraceOperators trace_operators(const CollectiveOperators& ops) {
    TraceOperators t;
    t.j_plus = ops.j_plus.cast<Complex>();
    t.j_z = ops.j_z.cast<Complex>();
    t.j_plus_j_minus =
        SparseComplex((ops.j_plus * ops.j_minus).pruned().cast<Complex>());
    return t;
}

std::complex<double> expectation(const DensityMatrix& rho,
                                 const SparseComplex& op) {
    // Tr(rho op) = sum over nonzeros op_ij rho_ji
    Complex acc{0.0, 0.0};
    for (int k = 0; k < op.outerSize(); ++k) {
        for (SparseComplex::InnerIterator it(op, k); it; ++it) {
            acc += it.value() * rho(it.col(), it.row());
        }
    }
    return acc;
}

double expectation_real(const DensityMatrix& rho, const SparseComplex& op) {
    return expectation(rho, op).real();
}

EmissionTrace compute_trace(const LindbladModel& model,
                            const TraceOperators& obs,
                            const DensityMatrix& rho0,
                            const std::vector<double>& t_grid, double gamma,
                            const MasterOptions& opts) {
    EmissionTrace trace;
    const std::size_t n = t_grid.size();
    trace.times.reserve(n);
    trace.intensity.reserve(n);
    trace.inversion.reserve(n);
    trace.coherence.reserve(n);
    trace.purity.reserve(n);
    trace.trace_error.reserve(n);
    evolve_master_observe(
        model, rho0, t_grid, opts,
        [&](std::size_t, double t, const DensityMatrix& rho) {
            trace.times.push_back(t);
            trace.intensity.push_back(
                gamma * expectation_real(rho, obs.j_plus_j_minus));
            trace.inversion.push_back(expectation_real(rho, obs.j_z));
            trace.coherence.push_back(std::abs(expectation(rho, obs.j_plus)));
            trace.purity.push_back(rho.cwiseAbs2().sum());
            trace.trace_error.push_back(std::abs(rho.trace().real() - 1.0));
        });
    return trace;
}

std::vector<StateVector> evolve_unitary(const Eigen::MatrixXcd& hamiltonian,
                                        const StateVector& psi0,
                                        const std::vector<double>& t_grid) {
    check_grid(t_grid);
    if (psi0.size() != hamiltonian.rows()) {
        throw ConfigError("state dimension does not match the Hamiltonian");
    }
    if (std::abs(psi0.norm() - 1.0) > 1e-10) {
        throw ConfigError("initial state is not normalized");
    }
    if ((hamiltonian - hamiltonian.adjoint()).cwiseAbs().maxCoeff() >
        1e-12 * std::max(1.0, hamiltonian.cwiseAbs().maxCoeff())) {
        throw ConfigError("Hamiltonian is not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(hamiltonian);
    const Eigen::MatrixXcd& vecs = es.eigenvectors();
    const Eigen::VectorXd& vals = es.eigenvalues();
    const Eigen::VectorXcd coeff = vecs.adjoint() * psi0;

    std::vector<StateVector> out;
    out.reserve(t_grid.size());
    for (double t : t_grid) {
        const double dt = t - t_grid.front();
        Eigen::VectorXcd phase(vals.size());
        for (Eigen::Index k = 0; k < vals.size(); ++k) {
            phase(k) = std::exp(-kImag * vals(k) * dt) * coeff(k);
        }
        StateVector psi = vecs * phase;
        if (!psi.allFinite()) {
            throw NumericError("non-finite state during unitary evolution");
        }
        out.push_back(std::move(psi));
    }
    return out;
}

std::vector<double> emission_intensity(
    const std::vector<DensityMatrix>& trajectory, const SparseComplex& jp_jm,
    double gamma) {
    std::vector<double> out;
    out.reserve(trajectory.size());
    for (const auto& rho : trajectory) {
        out.push_back(gamma * expectation_real(rho, jp_jm));
    }
    return out;
}

EmissionTrace run_superradiance_cycle(const ModelParams& params,
                                      int n_molecules,
                                      const std::vector<double>& t_grid,
                                      const MasterOptions& opts) {
    if (params.gamma_collective <= 0.0) {
        throw ConfigError("superradiance cycle needs gamma_collective > 0");
    }
    const CollectiveOperators ops = build_collective_operators(n_molecules);
    const LindbladModel model = collective_model(params, ops);
    const StateVector psi = ground_state(n_molecules);
    const DensityMatrix rho0 = psi * psi.adjoint();
    return compute_trace(model, trace_operators(ops), rho0, t_grid,
                         params.gamma_collective, opts);
}

double derive_collective_rate(double coupling, double cavity_linewidth,
                              double detuning) {
    if (cavity_linewidth <= 0.0) {
        throw ConfigError("cavity linewidth must be > 0");
    }
    return coupling * coupling * cavity_linewidth /
           (detuning * detuning + 0.25 * cavity_linewidth * cavity_linewidth);
}

}  // namespace srsim
