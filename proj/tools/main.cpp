// srsim: superradiant emission in cylindrical nanocavities.
//
// Subcommands: simulate, compare, sweep, geometry, units.
// Exit codes: 0 success, 2 config error, 3 numerical invariant violation,
// 4 capacity exceeded.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "srsim/constants.hpp"
#include "srsim/dicke.hpp"
#include "srsim/dynamics.hpp"
#include "srsim/errors.hpp"
#include "srsim/geometry.hpp"
#include "srsim/oracle.hpp"
#include "srsim/scenario.hpp"
#include "srsim/units.hpp"

namespace {

std::vector<double> parse_values(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            out.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw srsim::ConfigError("bad value in --values: '" + item + "'");
        }
    }
    return out;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw srsim::ConfigError("cannot open output file: " + path);
    }
    out << content;
}

// Re-run a small config on the brute-force engine and report the worst
// per-sample observable deviation against the symmetric-subspace engine.
double oracle_deviation(const srsim::ScenarioConfig& cfg,
                        const srsim::ScenarioResult& quantum) {
    srsim::ScenarioConfig oracle_cfg = cfg;
    oracle_cfg.engine = srsim::Engine::Oracle;
    const srsim::ScenarioResult ref = srsim::run_scenario(oracle_cfg);
    double worst = 0.0;
    for (std::size_t i = 0; i < ref.trace.size(); ++i) {
        worst = std::max(worst, std::abs(ref.trace.intensity[i] -
                                         quantum.trace.intensity[i]));
        worst = std::max(worst, std::abs(ref.trace.inversion[i] -
                                         quantum.trace.inversion[i]));
        worst = std::max(worst, std::abs(ref.trace.coherence[i] -
                                         quantum.trace.coherence[i]));
    }
    return worst;
}

int run(int argc, char** argv) {
    CLI::App app{"Collective emission of water pseudo-spins in cylindrical "
                 "nanocavities"};
    app.require_subcommand(1);

    // simulate
    auto* sim = app.add_subcommand("simulate", "Run one scenario");
    std::string sim_config, sim_preset, sim_out = "trace.csv";
    bool sim_oracle = false;
    sim->add_option("--config", sim_config, "Scenario config JSON");
    sim->add_option("--preset", sim_preset,
                    "Scenario preset (amyloid-polyq, amyloid-abeta, "
                    "microtubule)");
    sim->add_option("--out", sim_out, "Trace CSV output path");
    sim->add_flag("--oracle", sim_oracle)->group("");  // hidden cross-check

    // compare
    auto* cmp = app.add_subcommand("compare", "Run two arms and report ratios");
    std::string cmp_preset, cmp_a, cmp_b;
    cmp->add_option("--preset", cmp_preset,
                    "Comparison preset (microtubule-vs-amyloid)");
    cmp->add_option("--config-a", cmp_a, "First arm config JSON");
    cmp->add_option("--config-b", cmp_b, "Second arm config JSON");

    // sweep
    auto* swp = app.add_subcommand("sweep", "Sweep one parameter");
    std::string swp_config, swp_param, swp_values, swp_out;
    swp->add_option("--config", swp_config, "Base config JSON")->required();
    swp->add_option("--param", swp_param, "Parameter name")->required();
    swp->add_option("--values", swp_values, "Comma-separated values")
        ->required();
    swp->add_option("--out", swp_out, "Sweep CSV output path (default stdout)");

    // geometry
    auto* geo = app.add_subcommand("geometry", "Inspect a cavity preset");
    std::string geo_preset;
    double geo_length = 0.0;
    geo->add_option("--preset", geo_preset, "Geometry preset name")
        ->required();
    geo->add_option("--length-nm", geo_length,
                    "Segment length (default: preset length)");

    // units
    auto* uni = app.add_subcommand("units", "Unit conversions");
    double uni_wavenumber = -1.0, uni_displacement = -1.0,
           uni_temperature = 310.0;
    uni->add_option("--wavenumber", uni_wavenumber, "cm^-1");
    uni->add_option("--dipole-displacement", uni_displacement, "angstrom");
    uni->add_option("--temperature", uni_temperature,
                    "K, for the thermal ratio readout");

    CLI11_PARSE(app, argc, argv);

    if (*sim) {
        if (sim_config.empty() == sim_preset.empty()) {
            throw srsim::ConfigError(
                "simulate needs exactly one of --config or --preset");
        }
        const srsim::ScenarioConfig cfg =
            sim_config.empty() ? srsim::preset_scenario(sim_preset)
                               : srsim::load_config(sim_config);
        const srsim::ScenarioResult result = srsim::run_scenario(cfg);
        std::ostringstream csv;
        srsim::write_trace_csv(csv, result.trace);
        write_file(sim_out, csv.str());
        nlohmann::json j = srsim::metrics_json(result);
        if (sim_oracle && cfg.engine == srsim::Engine::Quantum) {
            j["oracle_max_deviation"] = oracle_deviation(cfg, result);
        }
        std::cout << j.dump(2) << '\n';
        return 0;
    }

    if (*cmp) {
        std::pair<srsim::ScenarioConfig, srsim::ScenarioConfig> arms;
        if (!cmp_preset.empty()) {
            arms = srsim::preset_comparison(cmp_preset);
        } else if (!cmp_a.empty() && !cmp_b.empty()) {
            arms = {srsim::load_config(cmp_a), srsim::load_config(cmp_b)};
        } else {
            throw srsim::ConfigError(
                "compare needs --preset or both --config-a and --config-b");
        }
        const srsim::ComparisonReport report =
            srsim::compare_scenarios(arms.first, arms.second);
        std::cout << srsim::comparison_json(report).dump(2) << '\n';
        return 0;
    }

    if (*swp) {
        const srsim::ScenarioConfig base = srsim::load_config(swp_config);
        const std::string csv =
            srsim::sweep(base, swp_param, parse_values(swp_values));
        if (swp_out.empty()) {
            std::cout << csv;
        } else {
            write_file(swp_out, csv);
        }
        return 0;
    }

    if (*geo) {
        const srsim::NanotubeGeometry g = srsim::preset_from_name(geo_preset);
        const double length = geo_length > 0.0 ? geo_length : g.length_nm;
        std::cout << srsim::geometry_json(g, length).dump(2) << '\n';
        return 0;
    }

    if (*uni) {
        nlohmann::json j;
        if (uni_wavenumber >= 0.0) {
            const double energy = srsim::wavenumber_to_energy(uni_wavenumber);
            j["wavenumber_per_cm"] = uni_wavenumber;
            j["angular_frequency_rad_per_s"] =
                srsim::wavenumber_to_angular_frequency(uni_wavenumber);
            j["energy_J"] = energy;
            j["energy_meV"] = srsim::joule_to_mev(energy);
            j["energy_over_kT"] =
                srsim::energy_over_kt(energy, uni_temperature);
            j["temperature_K"] = uni_temperature;
        }
        if (uni_displacement >= 0.0) {
            const double mu =
                srsim::dipole_moment_from_displacement(uni_displacement);
            j["displacement_A"] = uni_displacement;
            j["dipole_Cm"] = mu;
            j["dipole_debye"] = srsim::coulomb_meter_to_debye(mu);
        }
        if (j.empty()) {
            throw srsim::ConfigError(
                "units needs --wavenumber or --dipole-displacement");
        }
        std::cout << j.dump(2) << '\n';
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const srsim::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const srsim::NumericError& e) {
        std::cerr << "numerical error: " << e.what() << '\n';
        return 3;
    } catch (const srsim::CapacityError& e) {
        std::cerr << "capacity exceeded: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
