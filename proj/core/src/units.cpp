#include "srsim/units.hpp"

#include <numbers>
#include <string>

#include "srsim/constants.hpp"
#include "srsim/errors.hpp"

namespace srsim {

namespace {

void require_nonnegative(double x, const char* what) {
    if (x < 0.0) {
        throw ConfigError(std::string(what) + " must be >= 0, got " +
                          std::to_string(x));
    }
}

}  // namespace

double wavenumber_to_angular_frequency(double sigma_per_cm) {
    require_nonnegative(sigma_per_cm, "wavenumber");
    const double c_cm_per_s = constants::speed_of_light * 100.0;
    return 2.0 * std::numbers::pi * c_cm_per_s * sigma_per_cm;
}

double wavenumber_to_energy(double sigma_per_cm) {
    require_nonnegative(sigma_per_cm, "wavenumber");
    const double c_cm_per_s = constants::speed_of_light * 100.0;
    return constants::planck * c_cm_per_s * sigma_per_cm;
}

double dipole_moment_from_displacement(double displacement_angstrom) {
    require_nonnegative(displacement_angstrom, "displacement");
    return 2.0 * constants::proton_charge *
           angstrom_to_meter(displacement_angstrom);
}

double joule_to_mev(double energy_joule) {
    return energy_joule / constants::proton_charge * 1e3;
}

double coulomb_meter_to_debye(double dipole_si) {
    return dipole_si / constants::debye;
}

double energy_over_kt(double energy_joule, double temperature_kelvin) {
    if (temperature_kelvin <= 0.0) {
        throw ConfigError("temperature must be > 0 K");
    }
    return energy_joule / (constants::boltzmann * temperature_kelvin);
}

}  // namespace srsim
