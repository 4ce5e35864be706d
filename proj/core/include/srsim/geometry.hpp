#pragma once

#include <string>

namespace srsim {

/// Cylindrical nanotube (or microtubule) cavity, all transverse dimensions
/// in angstrom. `length_nm` is the simulated axial segment.
struct NanotubeGeometry {
    std::string name;
    double outer_diameter_A = 0.0;
    double wall_thickness_A = 0.0;   // per-side annulus thickness
    double lumen_diameter_A = 0.0;   // open water-filled core
    double bound_water_layer_A = 0.0;  // layer adhering to the wall, not solvent
    double axial_repeat_A = 4.75;    // beta-strand stacking period
    double length_nm = 0.0;

    double free_core_diameter_A() const {
        return lumen_diameter_A - 2.0 * bound_water_layer_A;
    }

    /// Throws ConfigError if the dimensions are inconsistent.
    void validate() const;
};

enum class GeometryPreset {
    AbetaDoubleSheet,  // two concentric beta-sheet cylinders, 57 A outer
    AbetaVariant,      // single-sheet fiber, 35-40 A
    PolyqSup35,        // poly-L-glutamine / Sup35 cylinder, 30 A outer
    Microtubule,
};

NanotubeGeometry make_preset(GeometryPreset preset);
NanotubeGeometry preset_from_name(const std::string& name);
GeometryPreset preset_id_from_name(const std::string& name);

struct WaterCount {
    long long count = 0;
    double effective_diameter_A = 0.0;
    double water_volume_A3 = 0.0;    // cylinder volume used for the count
    double bound_layer_volume_A3 = 0.0;
};

/// Number of water molecules in a segment of the given length. With
/// include_bound_layer=false (default) only the free core counts; the bound
/// layer volume is reported separately either way.
WaterCount water_count(const NanotubeGeometry& geom, double length_nm,
                       bool include_bound_layer = false,
                       double water_molecular_volume_A3 = 29.9);

/// Terminal-atom separation of side chains in a helical polyglutamine fiber
/// with n residues per turn, in angstrom. Chord model on a circle of radius
/// R(n) = a*n + b, calibrated once against the 18/20/22 residue anchors.
double sidechain_contact_distance(int residues_per_turn);

/// TE11 circular-waveguide cutoff of the lumen, rad/s.
double lowest_mode_cutoff(const NanotubeGeometry& geom,
                          double relative_permittivity = 1.0);

/// Volume of the free core (or full lumen) over one segment, in m^3.
double core_volume_m3(const NanotubeGeometry& geom, double length_nm,
                      bool include_bound_layer = false);

}  // namespace srsim
