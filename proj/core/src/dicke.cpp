#include "srsim/dicke.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "srsim/constants.hpp"
#include "srsim/errors.hpp"

namespace srsim {

namespace {

// ladder coefficient <j, m+1| J+ |j, m>
double ladder_coeff(double j, double m) {
    return std::sqrt(j * (j + 1.0) - m * (m + 1.0));
}

}  // namespace

CollectiveOperators build_collective_operators(int n_molecules,
                                               int max_molecules) {
    if (n_molecules < 1) {
        throw ConfigError("n_molecules must be >= 1");
    }
    if (n_molecules > max_molecules) {
        throw CapacityError("n_molecules = " + std::to_string(n_molecules) +
                            " exceeds the quantum-engine limit of " +
                            std::to_string(max_molecules));
    }
    CollectiveOperators ops;
    ops.basis = DickeBasis{n_molecules};
    const int dim = ops.basis.dimension();
    const double j = ops.basis.j();

    std::vector<Eigen::Triplet<double>> plus, z;
    plus.reserve(dim - 1);
    z.reserve(dim);
    for (int i = 0; i < dim; ++i) {
        const double m = ops.basis.m_value(i);
        z.emplace_back(i, i, m);
        if (i + 1 < dim) {
            plus.emplace_back(i + 1, i, ladder_coeff(j, m));
        }
    }
    ops.j_plus.resize(dim, dim);
    ops.j_plus.setFromTriplets(plus.begin(), plus.end());
    ops.j_minus = SparseReal(ops.j_plus.transpose());
    ops.j_z.resize(dim, dim);
    ops.j_z.setFromTriplets(z.begin(), z.end());
    return ops;
}

double coupling_constant(const ModelParams& params) {
    if (params.mode_volume <= 0.0) {
        throw ConfigError("mode_volume must be > 0");
    }
    if (params.mode_frequency <= 0.0) {
        throw ConfigError("mode_frequency must be > 0");
    }
    const double field_per_photon =
        std::sqrt(constants::reduced_planck * params.mode_frequency /
                  (2.0 * constants::vacuum_permittivity * params.mode_volume));
    return params.dipole / constants::reduced_planck * field_per_photon;
}

SparseReal build_hamiltonian(const ModelParams& params, const DickeBasis& basis,
                             const FieldMode& mode) {
    if (mode.fock_cutoff < 1) {
        throw ConfigError("fock_cutoff must be >= 1");
    }
    const int spin_dim = basis.dimension();
    const int fock_dim = mode.fock_cutoff + 1;
    const long long dim = static_cast<long long>(spin_dim) * fock_dim;
    constexpr long long kMaxDim = 1 << 20;
    if (dim > kMaxDim) {
        throw CapacityError("product-space dimension " + std::to_string(dim) +
                            " exceeds the memory budget of " +
                            std::to_string(kMaxDim));
    }
    const double j = basis.j();
    const double g = params.coupling;
    const double w = mode.frequency;

    auto idx = [fock_dim](int s, int n) { return s * fock_dim + n; };

    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(static_cast<size_t>(dim) * 3);
    for (int s = 0; s < spin_dim; ++s) {
        const double m = basis.m_value(s);
        for (int n = 0; n < fock_dim; ++n) {
            trip.emplace_back(idx(s, n), idx(s, n), w * n + params.epsilon * m);
            // a^dag J-: |s, n> -> |s-1, n+1>
            if (s > 0 && n + 1 < fock_dim && g != 0.0) {
                const double amp =
                    g * ladder_coeff(j, m - 1.0) * std::sqrt(n + 1.0);
                trip.emplace_back(idx(s - 1, n + 1), idx(s, n), amp);
                trip.emplace_back(idx(s, n), idx(s - 1, n + 1), amp);
            }
        }
    }
    SparseReal h(static_cast<int>(dim), static_cast<int>(dim));
    h.setFromTriplets(trip.begin(), trip.end());
    return h;
}

SparseReal excitation_number_operator(const DickeBasis& basis,
                                      const FieldMode& mode) {
    const int spin_dim = basis.dimension();
    const int fock_dim = mode.fock_cutoff + 1;
    const int dim = spin_dim * fock_dim;
    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(dim);
    for (int s = 0; s < spin_dim; ++s) {
        for (int n = 0; n < fock_dim; ++n) {
            trip.emplace_back(s * fock_dim + n, s * fock_dim + n,
                              n + basis.m_value(s) + basis.j());
        }
    }
    SparseReal op(dim, dim);
    op.setFromTriplets(trip.begin(), trip.end());
    return op;
}

Eigen::VectorXcd spin_coherent_state(int n_molecules, double theta) {
    if (n_molecules < 1) {
        throw ConfigError("n_molecules must be >= 1");
    }
    const int dim = n_molecules + 1;
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(dim);
    const double lc = std::log(std::cos(theta / 2.0));
    const double ls = std::log(std::sin(theta / 2.0));
    // index i has i molecules excited; log-space binomials keep N ~ 4096 sane
    for (int k = 0; k <= n_molecules; ++k) {
        const double log_binom = std::lgamma(n_molecules + 1.0) -
                                 std::lgamma(k + 1.0) -
                                 std::lgamma(n_molecules - k + 1.0);
        double log_amp = 0.5 * log_binom;
        if (k > 0) log_amp += k * lc;
        if (k < n_molecules) log_amp += (n_molecules - k) * ls;
        if ((k > 0 && !std::isfinite(lc)) ||
            (k < n_molecules && !std::isfinite(ls))) {
            continue;  // exact pole: that amplitude is zero
        }
        psi(k) = std::exp(log_amp);
    }
    psi.normalize();
    return psi;
}

Eigen::VectorXcd ground_state(int n_molecules) {
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(n_molecules + 1);
    psi(0) = 1.0;
    return psi;
}

Eigen::VectorXcd fully_excited_state(int n_molecules) {
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(n_molecules + 1);
    psi(n_molecules) = 1.0;
    return psi;
}

}  // namespace srsim
