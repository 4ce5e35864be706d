#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "srsim/dicke.hpp"
#include "srsim/geometry.hpp"
#include "srsim/trace.hpp"

namespace srsim {

enum class Engine { Quantum, Semiclassical, Oracle };

enum class InitialStateKind { Ground, FullyExcited, Tipped };

struct InitialState {
    InitialStateKind kind = InitialStateKind::FullyExcited;
    double tipping_angle = 0.0;  // only for Tipped
};

/// One simulation arm. Field names mirror the JSON config schema exactly;
/// unknown JSON fields are rejected.
struct ScenarioConfig {
    std::optional<NanotubeGeometry> geometry;
    int n_molecules = 0;          // 0 = "from_geometry"
    double epsilon_wavenumber = 200.0;   // cm^-1
    double dipole_displacement = 0.2;    // angstrom
    double gamma_collective = 0.0;       // 1/s
    double gamma_dephasing = 0.0;        // 1/s (after coherence-time resolution)
    double pump_rate = 0.0;              // 1/s
    InitialState initial_state;
    Engine engine = Engine::Quantum;
    double t_max = 0.0;                  // s
    int n_samples = 1000;
    int fock_cutoff = 4;                 // closed-cavity runs only
    std::string seed_label;

    int resolved_n_molecules() const;  // applies "from_geometry"
    void validate() const;
};

ScenarioConfig parse_config(const nlohmann::json& j);
ScenarioConfig load_config(const std::string& path);

/// Named single-arm presets: "amyloid-polyq", "amyloid-abeta", "microtubule".
ScenarioConfig preset_scenario(const std::string& name);

/// Named comparison presets: "microtubule-vs-amyloid".
std::pair<ScenarioConfig, ScenarioConfig> preset_comparison(
    const std::string& name);

struct ScenarioResult {
    EmissionTrace trace;
    PulseMetrics metrics;
    int n_molecules = 0;
    std::string engine;
};

/// Deterministic end-to-end run of one arm.
ScenarioResult run_scenario(const ScenarioConfig& config);

struct ComparisonReport {
    ScenarioResult arm_a;
    ScenarioResult arm_b;
    bool a_ok = false;
    bool b_ok = false;
    std::string a_error;
    std::string b_error;
    // Ratios are arm_b over arm_a; NaN when either arm failed.
    double coherence_time_ratio = 0.0;
    double n_ratio = 0.0;
    double peak_ratio = 0.0;
};

ComparisonReport compare_scenarios(const ScenarioConfig& config_a,
                                   const ScenarioConfig& config_b);

/// One PulseMetrics row per value, rows in input order. Throws ConfigError
/// for unknown parameter names.
std::string sweep(const ScenarioConfig& base, const std::string& param_name,
                  const std::vector<double>& values);

/// Trace CSV contract: fixed header, 17 significant digits.
void write_trace_csv(std::ostream& os, const EmissionTrace& trace);

nlohmann::json metrics_json(const ScenarioResult& result);
nlohmann::json comparison_json(const ComparisonReport& report);
nlohmann::json geometry_json(const NanotubeGeometry& geom, double length_nm);

std::string format_double(double x);  // %.17g

}  // namespace srsim
