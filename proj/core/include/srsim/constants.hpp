#pragma once

#include <numbers>

namespace srsim::constants {

// CODATA 2018. The first five are exact by definition of the SI.
inline constexpr double speed_of_light = 299792458.0;            // m/s
inline constexpr double planck = 6.62607015e-34;                 // J s
inline constexpr double boltzmann = 1.380649e-23;                // J/K
inline constexpr double proton_charge = 1.602176634e-19;         // C
inline constexpr double avogadro = 6.02214076e23;                // 1/mol

inline constexpr double reduced_planck = planck / (2.0 * std::numbers::pi);
inline constexpr double vacuum_permittivity = 8.8541878128e-12;  // F/m

// 1 debye = 1e-21/c C m
inline constexpr double debye = 1e-21 / speed_of_light;          // C m

}  // namespace srsim::constants
