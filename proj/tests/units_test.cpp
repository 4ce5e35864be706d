#include <doctest.h>

#include "srsim/constants.hpp"
#include "srsim/errors.hpp"
#include "srsim/units.hpp"

using namespace srsim;

TEST_CASE("wavenumber to angular frequency") {
    CHECK(wavenumber_to_angular_frequency(0.0) == 0.0);
    CHECK(wavenumber_to_angular_frequency(200.0) ==
          doctest::Approx(3.7673e13).epsilon(1e-4));
    CHECK(wavenumber_to_angular_frequency(1.0) ==
          doctest::Approx(1.8837e11).epsilon(1e-4));
    CHECK_THROWS_AS(wavenumber_to_angular_frequency(-1.0), ConfigError);
}

TEST_CASE("wavenumber to energy") {
    CHECK(wavenumber_to_energy(0.0) == 0.0);
    const double e200 = wavenumber_to_energy(200.0);
    CHECK(e200 == doctest::Approx(3.9729e-21).epsilon(1e-4));
    CHECK(joule_to_mev(e200) == doctest::Approx(24.80).epsilon(1e-3));
    CHECK(energy_over_kt(e200, 310.0) == doctest::Approx(0.928).epsilon(1e-3));
    CHECK_THROWS_AS(wavenumber_to_energy(-5.0), ConfigError);
    CHECK_THROWS_AS(energy_over_kt(e200, 0.0), ConfigError);
}

TEST_CASE("dipole moment from proton displacement") {
    CHECK(dipole_moment_from_displacement(0.0) == 0.0);
    const double mu = dipole_moment_from_displacement(0.2);
    CHECK(mu == doctest::Approx(6.409e-30).epsilon(1e-4));
    CHECK(coulomb_meter_to_debye(mu) == doctest::Approx(1.921).epsilon(1e-4));
    CHECK(dipole_moment_from_displacement(0.1) ==
          doctest::Approx(3.204e-30).epsilon(1e-4));
    CHECK_THROWS_AS(dipole_moment_from_displacement(-0.1), ConfigError);
}

TEST_CASE("hbar omega equals h c sigma") {
    for (double sigma : {1.0, 57.3, 200.0, 4096.0}) {
        const double lhs =
            wavenumber_to_angular_frequency(sigma) * constants::reduced_planck;
        const double rhs = wavenumber_to_energy(sigma);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
}

TEST_CASE("conversions are linear") {
    for (double x : {0.5, 3.0, 123.0}) {
        CHECK(wavenumber_to_angular_frequency(2.0 * x) ==
              doctest::Approx(2.0 * wavenumber_to_angular_frequency(x))
                  .epsilon(1e-15));
        CHECK(wavenumber_to_energy(2.0 * x) ==
              doctest::Approx(2.0 * wavenumber_to_energy(x)).epsilon(1e-15));
        CHECK(dipole_moment_from_displacement(2.0 * x) ==
              doctest::Approx(2.0 * dipole_moment_from_displacement(x))
                  .epsilon(1e-15));
    }
}

TEST_CASE("reduced planck consistency") {
    CHECK(constants::reduced_planck * 2.0 * 3.14159265358979323846 ==
          doctest::Approx(constants::planck).epsilon(1e-15));
}
