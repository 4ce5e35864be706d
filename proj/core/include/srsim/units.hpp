#pragma once

namespace srsim {

/// sigma in cm^-1 -> angular frequency in rad/s. Throws ConfigError on
/// negative input.
double wavenumber_to_angular_frequency(double sigma_per_cm);

/// sigma in cm^-1 -> photon energy in joule.
double wavenumber_to_energy(double sigma_per_cm);

/// Proton displacement P in angstrom -> dipole moment 2*e_p*P in C m.
double dipole_moment_from_displacement(double displacement_angstrom);

double joule_to_mev(double energy_joule);
double coulomb_meter_to_debye(double dipole_si);

/// E / (k_B T), the thermal-occupation exponent.
double energy_over_kt(double energy_joule, double temperature_kelvin);

inline double angstrom_to_meter(double x) { return x * 1e-10; }
inline double nanometer_to_meter(double x) { return x * 1e-9; }

}  // namespace srsim
