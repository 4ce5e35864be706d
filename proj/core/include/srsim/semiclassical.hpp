#pragma once

#include <vector>

#include "srsim/trace.hpp"

namespace srsim {

/// Mean-field limit of collective decay; valid for arbitrarily large N.
struct SemiclassicalParams {
    double n_molecules = 1.0;
    double gamma = 0.0;                  // 1/s
    double initial_tipping_angle = -1.0;  // rad from the fully excited pole;
                                          // negative selects the default
                                          // 2/sqrt(N); exactly 0 is an error

    double tipping_angle() const;
    void validate() const;
};

/// Closed-form pulse I(t) = (N^2 g / 4) sech^2(N g (t - t_D) / 2),
/// t_D = (2 / N g) ln(cot(theta0 / 2)) ~= ln(N) / (N g) at the default angle.
EmissionTrace sech2_pulse(const SemiclassicalParams& params,
                          const std::vector<double>& t_grid);

/// Bloch-angle ODE d theta/dt = (N g / 2) sin(theta), integrated with RK4.
/// Throws ConfigError for theta0 = 0 (unstable fixed point, no evolution).
EmissionTrace bloch_ode(const SemiclassicalParams& params,
                        const std::vector<double>& t_grid);

}  // namespace srsim
