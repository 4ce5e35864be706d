#include <doctest.h>

#include "srsim/errors.hpp"
#include "srsim/geometry.hpp"

using namespace srsim;

TEST_CASE("water count golden values") {
    const auto polyq = make_preset(GeometryPreset::PolyqSup35);
    // one axial repeat, free 6 A core
    CHECK(water_count(polyq, 0.475).count == 4);

    const auto abeta = make_preset(GeometryPreset::AbetaDoubleSheet);
    CHECK(water_count(abeta, 0.475, true).count == 47);

    const auto mt = make_preset(GeometryPreset::Microtubule);
    const auto wc = water_count(mt, 1.0, true);
    CHECK(wc.count >= 5909);
    CHECK(wc.count <= 5911);
}

TEST_CASE("water count errors and edge cases") {
    const auto polyq = make_preset(GeometryPreset::PolyqSup35);
    CHECK_THROWS_AS(water_count(polyq, 0.0), ConfigError);
    CHECK_THROWS_AS(water_count(polyq, -1.0), ConfigError);

    NanotubeGeometry swallowed = polyq;
    swallowed.bound_water_layer_A = 7.0;  // 2*7 > 12 A lumen
    CHECK_THROWS_AS(water_count(swallowed, 1.0), ConfigError);
}

TEST_CASE("water count monotonicity") {
    const auto abeta = make_preset(GeometryPreset::AbetaDoubleSheet);
    long long prev = -1;
    for (double len : {0.2, 0.5, 1.0, 2.0, 5.0}) {
        const long long c = water_count(abeta, len, true).count;
        CHECK(c >= prev);
        prev = c;
    }
    // including the bound layer can only add molecules
    const auto polyq = make_preset(GeometryPreset::PolyqSup35);
    for (double len : {0.475, 1.0, 3.0}) {
        CHECK(water_count(polyq, len, true).count >=
              water_count(polyq, len, false).count);
    }
}

TEST_CASE("sidechain contact distance anchors") {
    CHECK(sidechain_contact_distance(20) == doctest::Approx(3.6).epsilon(0.042));
    CHECK(sidechain_contact_distance(18) == doctest::Approx(3.2).epsilon(0.047));
    CHECK(sidechain_contact_distance(22) == doctest::Approx(3.9).epsilon(0.039));
    CHECK_THROWS_AS(sidechain_contact_distance(11), ConfigError);
    CHECK_THROWS_AS(sidechain_contact_distance(31), ConfigError);
}

TEST_CASE("sidechain contact distance strictly increasing on [18, 22]") {
    for (int n = 18; n < 22; ++n) {
        CHECK(sidechain_contact_distance(n + 1) >
              sidechain_contact_distance(n));
    }
}

TEST_CASE("TE11 cutoff") {
    const auto mt = make_preset(GeometryPreset::Microtubule);
    CHECK(lowest_mode_cutoff(mt) == doctest::Approx(7.36e16).epsilon(1e-3));

    NanotubeGeometry polyq_core = make_preset(GeometryPreset::PolyqSup35);
    polyq_core.lumen_diameter_A = 6.0;  // free channel as the guide
    polyq_core.wall_thickness_A = 12.0;
    polyq_core.bound_water_layer_A = 0.0;
    CHECK(lowest_mode_cutoff(polyq_core) ==
          doctest::Approx(1.84e18).epsilon(1e-3));

    // 1/r scaling: cutoff * radius is geometry independent
    const auto abeta = make_preset(GeometryPreset::AbetaDoubleSheet);
    const double prod_a = lowest_mode_cutoff(abeta) * abeta.lumen_diameter_A;
    const double prod_b = lowest_mode_cutoff(mt) * mt.lumen_diameter_A;
    CHECK(prod_a == doctest::Approx(prod_b).epsilon(1e-12));

    NanotubeGeometry doubled = abeta;
    doubled.lumen_diameter_A *= 2.0;
    doubled.outer_diameter_A *= 2.0;
    CHECK(lowest_mode_cutoff(doubled) ==
          doctest::Approx(0.5 * lowest_mode_cutoff(abeta)).epsilon(1e-12));

    NanotubeGeometry zero = abeta;
    zero.lumen_diameter_A = 0.0;
    zero.wall_thickness_A = 28.0;
    CHECK_THROWS_AS(lowest_mode_cutoff(zero), ConfigError);
    CHECK_THROWS_AS(lowest_mode_cutoff(abeta, 0.5), ConfigError);
}

TEST_CASE("preset roundtrip and validation") {
    for (const char* name :
         {"abeta-double-sheet", "abeta-variant", "polyq-sup35",
          "microtubule"}) {
        const auto g = preset_from_name(name);
        CHECK(g.name == name);
        CHECK_NOTHROW(g.validate());
    }
    CHECK_THROWS_AS(preset_from_name("prion-x"), ConfigError);

    NanotubeGeometry bad;
    bad.name = "bad";
    bad.outer_diameter_A = 10.0;
    bad.wall_thickness_A = 8.0;
    bad.lumen_diameter_A = 8.0;
    CHECK_THROWS_AS(bad.validate(), ConfigError);
}
