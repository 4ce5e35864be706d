#include "srsim/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numbers>
#include <set>
#include <sstream>

#include "srsim/dynamics.hpp"
#include "srsim/errors.hpp"
#include "srsim/oracle.hpp"
#include "srsim/semiclassical.hpp"
#include "srsim/units.hpp"

namespace srsim {

namespace {

using nlohmann::json;

constexpr int kClosedRunMaxDimension = 2048;

const std::set<std::string> kConfigKeys = {
    "geometry",          "n_molecules",      "epsilon_wavenumber",
    "dipole_displacement", "gamma_collective", "gamma_dephasing",
    "pump_rate",         "initial_state",    "engine",
    "t_max",             "n_samples",        "fock_cutoff",
    "seed_label",
};

const std::set<std::string> kGeometryKeys = {
    "name",          "outer_diameter_A",    "wall_thickness_A",
    "lumen_diameter_A", "bound_water_layer_A", "axial_repeat_A",
    "length_nm",
};

double require_number(const json& j, const std::string& field) {
    if (!j.is_number()) {
        throw ConfigError("field '" + field + "' must be a number");
    }
    return j.get<double>();
}

NanotubeGeometry parse_geometry(const json& j) {
    if (j.is_string()) {
        return preset_from_name(j.get<std::string>());
    }
    if (!j.is_object()) {
        throw ConfigError("'geometry' must be a preset name or an object");
    }
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (!kGeometryKeys.count(key)) {
            throw ConfigError("unknown geometry field '" + key + "'");
        }
    }
    NanotubeGeometry g;
    g.name = j.value("name", "custom");
    g.outer_diameter_A = require_number(j.at("outer_diameter_A"),
                                        "outer_diameter_A");
    g.wall_thickness_A = require_number(j.at("wall_thickness_A"),
                                        "wall_thickness_A");
    g.lumen_diameter_A = require_number(j.at("lumen_diameter_A"),
                                        "lumen_diameter_A");
    if (j.contains("bound_water_layer_A")) {
        g.bound_water_layer_A =
            require_number(j.at("bound_water_layer_A"), "bound_water_layer_A");
    }
    if (j.contains("axial_repeat_A")) {
        g.axial_repeat_A = require_number(j.at("axial_repeat_A"),
                                          "axial_repeat_A");
    }
    g.length_nm = require_number(j.at("length_nm"), "length_nm");
    g.validate();
    return g;
}

InitialState parse_initial_state(const std::string& s) {
    InitialState st;
    if (s == "ground") {
        st.kind = InitialStateKind::Ground;
    } else if (s == "fully_excited") {
        st.kind = InitialStateKind::FullyExcited;
    } else if (s.rfind("tipped:", 0) == 0) {
        st.kind = InitialStateKind::Tipped;
        try {
            st.tipping_angle = std::stod(s.substr(7));
        } catch (const std::exception&) {
            throw ConfigError("bad tipping angle in initial_state '" + s + "'");
        }
        if (!(st.tipping_angle > 0.0) ||
            !(st.tipping_angle <= std::numbers::pi)) {
            throw ConfigError("tipping angle must be in (0, pi]");
        }
    } else {
        throw ConfigError(
            "initial_state must be 'ground', 'fully_excited' or 'tipped:<rad>'");
    }
    return st;
}

Engine parse_engine(const std::string& s) {
    if (s == "quantum") return Engine::Quantum;
    if (s == "semiclassical") return Engine::Semiclassical;
    if (s == "oracle") return Engine::Oracle;
    throw ConfigError("engine must be 'quantum', 'semiclassical' or 'oracle'");
}

std::string engine_name(Engine e) {
    switch (e) {
        case Engine::Quantum: return "quantum";
        case Engine::Semiclassical: return "semiclassical";
        case Engine::Oracle: return "oracle";
    }
    return "?";
}

double resolve_gamma_dephasing(const json& j) {
    if (j.is_number()) {
        return j.get<double>();
    }
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        const std::string prefix = "from_coherence_time:";
        if (s.rfind(prefix, 0) == 0) {
            double tau = 0.0;
            try {
                tau = std::stod(s.substr(prefix.size()));
            } catch (const std::exception&) {
                throw ConfigError("bad coherence time in '" + s + "'");
            }
            if (!(tau > 0.0)) {
                throw ConfigError("coherence time must be > 0");
            }
            // N = 1 convention: fitted coherence time tau <-> gamma_phi = 2/tau
            return 2.0 / tau;
        }
    }
    throw ConfigError(
        "gamma_dephasing must be a rate or 'from_coherence_time:<s>'");
}

ModelParams model_params_for(const ScenarioConfig& cfg) {
    ModelParams p;
    p.epsilon = wavenumber_to_angular_frequency(cfg.epsilon_wavenumber);
    p.dipole = dipole_moment_from_displacement(cfg.dipole_displacement);
    p.mode_frequency = p.epsilon;  // retained mode resonant by default
    if (cfg.geometry) {
        p.mode_volume =
            core_volume_m3(*cfg.geometry, cfg.geometry->length_nm);
        if (p.mode_volume > 0.0) {
            p.coupling = coupling_constant(p);
        }
    }
    p.gamma_collective = cfg.gamma_collective;
    p.gamma_dephasing = cfg.gamma_dephasing;
    p.pump_rate = cfg.pump_rate;
    return p;
}

StateVector dicke_initial_state(const InitialState& st, int n) {
    switch (st.kind) {
        case InitialStateKind::Ground: return ground_state(n);
        case InitialStateKind::FullyExcited: return fully_excited_state(n);
        case InitialStateKind::Tipped:
            return spin_coherent_state(n, st.tipping_angle);
    }
    throw ConfigError("bad initial state");
}

EmissionTrace run_quantum(const ScenarioConfig& cfg, const ModelParams& params,
                          int n) {
    const CollectiveOperators ops = build_collective_operators(n);
    const bool open_run = params.gamma_collective > 0.0 ||
                          params.gamma_dephasing > 0.0 ||
                          params.pump_rate > 0.0;
    const std::vector<double> grid = uniform_grid(cfg.t_max, cfg.n_samples);

    if (open_run) {
        const StateVector psi = dicke_initial_state(cfg.initial_state, n);
        const DensityMatrix rho0 = psi * psi.adjoint();
        return compute_trace(collective_model(params, ops),
                             trace_operators(ops), rho0, grid,
                             params.gamma_collective);
    }

    // Closed cavity: unitary Tavis-Cummings evolution on Dicke (x) Fock,
    // field starting in vacuum. Intensity is zero by definition (no decay
    // channel); spin observables come from the reduced state.
    const FieldMode mode{cfg.fock_cutoff, params.mode_frequency};
    const int fock_dim = mode.fock_cutoff + 1;
    const long long dim = static_cast<long long>(n + 1) * fock_dim;
    if (dim > kClosedRunMaxDimension) {
        throw CapacityError(
            "closed-cavity dimension " + std::to_string(dim) +
            " exceeds the dense-diagonalization limit of " +
            std::to_string(kClosedRunMaxDimension));
    }
    Eigen::MatrixXcd h = Eigen::MatrixXcd(
        build_hamiltonian(params, ops.basis, mode).cast<std::complex<double>>());
    const StateVector spin = dicke_initial_state(cfg.initial_state, n);
    StateVector psi0 = StateVector::Zero(dim);
    for (int s = 0; s <= n; ++s) {
        psi0(static_cast<long long>(s) * fock_dim) = spin(s);
    }
    const auto traj = evolve_unitary(h, psi0, grid);
    const TraceOperators obs = trace_operators(ops);

    EmissionTrace trace;
    trace.times = grid;
    for (const auto& psi : traj) {
        // reduced spin density matrix
        DensityMatrix rho = DensityMatrix::Zero(n + 1, n + 1);
        for (int a = 0; a <= n; ++a) {
            for (int b = 0; b <= n; ++b) {
                std::complex<double> acc{0.0, 0.0};
                for (int f = 0; f < fock_dim; ++f) {
                    acc += psi(static_cast<long long>(a) * fock_dim + f) *
                           std::conj(
                               psi(static_cast<long long>(b) * fock_dim + f));
                }
                rho(a, b) = acc;
            }
        }
        trace.intensity.push_back(0.0);
        trace.inversion.push_back(expectation_real(rho, obs.j_z));
        trace.coherence.push_back(std::abs(expectation(rho, obs.j_plus)));
        trace.purity.push_back(rho.cwiseAbs2().sum());
        trace.trace_error.push_back(std::abs(rho.trace().real() - 1.0));
    }
    return trace;
}

EmissionTrace run_oracle(const ScenarioConfig& cfg, const ModelParams& params,
                         int n) {
    if (n > kOracleMaxMolecules) {
        throw CapacityError("oracle engine is limited to N <= " +
                            std::to_string(kOracleMaxMolecules));
    }
    const FullSpaceOperators ops = build_full_operators(n);
    const StateVector dicke = dicke_initial_state(cfg.initial_state, n);
    const StateVector psi = lift_to_full(dicke);
    const DensityMatrix rho0 = psi * psi.adjoint();
    const std::vector<double> grid = uniform_grid(cfg.t_max, cfg.n_samples);
    return compute_trace(full_collective_model(params, ops),
                         full_trace_operators(ops), rho0, grid,
                         params.gamma_collective);
}

EmissionTrace run_semiclassical(const ScenarioConfig& cfg, int n) {
    SemiclassicalParams p;
    p.n_molecules = n;
    p.gamma = cfg.gamma_collective;
    switch (cfg.initial_state.kind) {
        case InitialStateKind::FullyExcited:
            p.initial_tipping_angle = -1.0;  // default 2/sqrt(N)
            break;
        case InitialStateKind::Tipped:
            p.initial_tipping_angle = cfg.initial_state.tipping_angle;
            break;
        case InitialStateKind::Ground:
            p.initial_tipping_angle = std::numbers::pi;
            break;
    }
    return bloch_ode(p, uniform_grid(cfg.t_max, cfg.n_samples));
}

}  // namespace

int ScenarioConfig::resolved_n_molecules() const {
    if (n_molecules > 0) return n_molecules;
    if (!geometry) {
        throw ConfigError(
            "n_molecules: 'from_geometry' requires a geometry");
    }
    const WaterCount wc = water_count(*geometry, geometry->length_nm);
    if (wc.count < 1) {
        throw ConfigError("geometry resolves to zero water molecules");
    }
    return static_cast<int>(wc.count);
}

void ScenarioConfig::validate() const {
    if (n_molecules < 0) {
        throw ConfigError("n_molecules must be >= 1 or 'from_geometry'");
    }
    if (epsilon_wavenumber < 0.0) {
        throw ConfigError("epsilon_wavenumber must be >= 0");
    }
    if (dipole_displacement < 0.0) {
        throw ConfigError("dipole_displacement must be >= 0");
    }
    if (gamma_collective < 0.0 || gamma_dephasing < 0.0 || pump_rate < 0.0) {
        throw ConfigError("rates must be >= 0");
    }
    if (t_max <= 0.0) {
        throw ConfigError("empty time grid: t_max must be > 0");
    }
    if (n_samples < 2) {
        throw ConfigError("n_samples must be >= 2");
    }
    if (fock_cutoff < 1) {
        throw ConfigError("fock_cutoff must be >= 1");
    }
    if (geometry) geometry->validate();
    resolved_n_molecules();
}

ScenarioConfig parse_config(const json& j) {
    if (!j.is_object()) {
        throw ConfigError("config must be a JSON object");
    }
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (!kConfigKeys.count(key)) {
            throw ConfigError("unknown config field '" + key + "'");
        }
    }
    ScenarioConfig cfg;
    if (j.contains("geometry")) {
        cfg.geometry = parse_geometry(j.at("geometry"));
    }
    if (j.contains("n_molecules")) {
        const json& n = j.at("n_molecules");
        if (n.is_string()) {
            if (n.get<std::string>() != "from_geometry") {
                throw ConfigError(
                    "n_molecules must be an integer or 'from_geometry'");
            }
            cfg.n_molecules = 0;
        } else if (n.is_number_integer()) {
            cfg.n_molecules = n.get<int>();
            if (cfg.n_molecules < 1) {
                throw ConfigError("n_molecules must be >= 1");
            }
        } else {
            throw ConfigError(
                "n_molecules must be an integer or 'from_geometry'");
        }
    }
    if (j.contains("epsilon_wavenumber")) {
        cfg.epsilon_wavenumber =
            require_number(j.at("epsilon_wavenumber"), "epsilon_wavenumber");
    }
    if (j.contains("dipole_displacement")) {
        cfg.dipole_displacement =
            require_number(j.at("dipole_displacement"), "dipole_displacement");
    }
    if (j.contains("gamma_collective")) {
        cfg.gamma_collective =
            require_number(j.at("gamma_collective"), "gamma_collective");
    }
    if (j.contains("gamma_dephasing")) {
        cfg.gamma_dephasing = resolve_gamma_dephasing(j.at("gamma_dephasing"));
    }
    if (j.contains("pump_rate")) {
        cfg.pump_rate = require_number(j.at("pump_rate"), "pump_rate");
    }
    if (j.contains("initial_state")) {
        if (!j.at("initial_state").is_string()) {
            throw ConfigError("initial_state must be a string");
        }
        cfg.initial_state =
            parse_initial_state(j.at("initial_state").get<std::string>());
    }
    if (j.contains("engine")) {
        if (!j.at("engine").is_string()) {
            throw ConfigError("engine must be a string");
        }
        cfg.engine = parse_engine(j.at("engine").get<std::string>());
    }
    if (j.contains("t_max")) {
        cfg.t_max = require_number(j.at("t_max"), "t_max");
    }
    if (j.contains("n_samples")) {
        if (!j.at("n_samples").is_number_integer()) {
            throw ConfigError("n_samples must be an integer");
        }
        cfg.n_samples = j.at("n_samples").get<int>();
    }
    if (j.contains("fock_cutoff")) {
        if (!j.at("fock_cutoff").is_number_integer()) {
            throw ConfigError("fock_cutoff must be an integer");
        }
        cfg.fock_cutoff = j.at("fock_cutoff").get<int>();
    }
    if (j.contains("seed_label")) {
        if (!j.at("seed_label").is_string()) {
            throw ConfigError("seed_label must be a string");
        }
        cfg.seed_label = j.at("seed_label").get<std::string>();
    }
    cfg.validate();
    return cfg;
}

ScenarioConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file: " + path);
    }
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ConfigError("config parse error in " + path + ": " + e.what());
    }
    return parse_config(j);
}

ScenarioConfig preset_scenario(const std::string& name) {
    ScenarioConfig cfg;
    if (name == "amyloid-polyq") {
        cfg.geometry = make_preset(GeometryPreset::PolyqSup35);
        cfg.n_molecules = 0;  // from geometry: 4 per axial repeat
        cfg.gamma_collective = 1e6;
        cfg.pump_rate = 1e4;
        cfg.initial_state.kind = InitialStateKind::FullyExcited;
        cfg.engine = Engine::Quantum;
        cfg.t_max = 3e-6;
        cfg.n_samples = 1500;
    } else if (name == "amyloid-abeta") {
        cfg.geometry = make_preset(GeometryPreset::AbetaDoubleSheet);
        cfg.n_molecules = 47;  // full lumen over one axial repeat
        cfg.gamma_collective = 1e6;
        cfg.initial_state.kind = InitialStateKind::FullyExcited;
        cfg.engine = Engine::Quantum;
        cfg.t_max = 6e-7;
        cfg.n_samples = 2000;
    } else if (name == "microtubule") {
        cfg.geometry = make_preset(GeometryPreset::Microtubule);
        cfg.n_molecules = 0;  // ~5.9e3 per nm of lumen
        cfg.gamma_collective = 1e6;
        cfg.initial_state.kind = InitialStateKind::FullyExcited;
        cfg.engine = Engine::Semiclassical;
        cfg.t_max = 5e-9;
        cfg.n_samples = 2000;
    } else {
        throw ConfigError("unknown scenario preset: " + name);
    }
    cfg.validate();
    return cfg;
}

std::pair<ScenarioConfig, ScenarioConfig> preset_comparison(
    const std::string& name) {
    if (name != "microtubule-vs-amyloid") {
        throw ConfigError("unknown comparison preset: " + name);
    }
    // Single-spin dephasing arms: gamma_phi = 2/tau pins the fitted
    // coherence time; the small decay channel (gamma_phi/10) produces the
    // pulse the metrics pipeline needs. Both arms share the structure, so
    // the coherence-time ratio reduces to the tau ratio, 1e8.
    auto arm = [](const char* geom, double tau) {
        ScenarioConfig cfg;
        cfg.geometry = preset_from_name(geom);
        cfg.n_molecules = 1;
        cfg.gamma_dephasing = 2.0 / tau;
        cfg.gamma_collective = cfg.gamma_dephasing / 10.0;
        cfg.initial_state = InitialState{InitialStateKind::Tipped,
                                         std::numbers::pi / 2.0};
        cfg.engine = Engine::Quantum;
        cfg.t_max = 4.0 / cfg.gamma_collective;
        cfg.n_samples = 2000;
        return cfg;
    };
    auto a = arm("microtubule", 1e-14);
    auto b = arm("polyq-sup35", 1e-6);
    a.validate();
    b.validate();
    return {a, b};
}

ScenarioResult run_scenario(const ScenarioConfig& config) {
    config.validate();
    const int n = config.resolved_n_molecules();
    const ModelParams params = model_params_for(config);

    ScenarioResult result;
    result.n_molecules = n;
    result.engine = engine_name(config.engine);
    switch (config.engine) {
        case Engine::Quantum:
            result.trace = run_quantum(config, params, n);
            break;
        case Engine::Oracle:
            result.trace = run_oracle(config, params, n);
            break;
        case Engine::Semiclassical:
            result.trace = run_semiclassical(config, n);
            break;
    }
    result.metrics = pulse_metrics(result.trace);
    return result;
}

ComparisonReport compare_scenarios(const ScenarioConfig& config_a,
                                   const ScenarioConfig& config_b) {
    ComparisonReport report;
    try {
        report.arm_a = run_scenario(config_a);
        report.a_ok = true;
    } catch (const std::exception& e) {
        report.a_error = e.what();
    }
    try {
        report.arm_b = run_scenario(config_b);
        report.b_ok = true;
    } catch (const std::exception& e) {
        report.b_error = e.what();
    }
    const double nan = std::numeric_limits<double>::quiet_NaN();
    if (report.a_ok && report.b_ok) {
        report.coherence_time_ratio = report.arm_b.metrics.coherence_time /
                                      report.arm_a.metrics.coherence_time;
        report.n_ratio = static_cast<double>(report.arm_b.n_molecules) /
                         report.arm_a.n_molecules;
        report.peak_ratio = report.arm_b.metrics.peak_intensity /
                            report.arm_a.metrics.peak_intensity;
    } else {
        report.coherence_time_ratio = nan;
        report.n_ratio = nan;
        report.peak_ratio = nan;
    }
    return report;
}

std::string sweep(const ScenarioConfig& base, const std::string& param_name,
                  const std::vector<double>& values) {
    auto apply = [&](ScenarioConfig cfg, double v) {
        if (param_name == "n_molecules") {
            cfg.n_molecules = static_cast<int>(v);
        } else if (param_name == "gamma_collective") {
            cfg.gamma_collective = v;
        } else if (param_name == "gamma_dephasing") {
            cfg.gamma_dephasing = v;
        } else if (param_name == "pump_rate") {
            cfg.pump_rate = v;
        } else if (param_name == "t_max") {
            cfg.t_max = v;
        } else if (param_name == "n_samples") {
            cfg.n_samples = static_cast<int>(v);
        } else if (param_name == "epsilon_wavenumber") {
            cfg.epsilon_wavenumber = v;
        } else if (param_name == "dipole_displacement") {
            cfg.dipole_displacement = v;
        } else if (param_name == "fock_cutoff") {
            cfg.fock_cutoff = static_cast<int>(v);
        } else {
            throw ConfigError("unknown sweep parameter '" + param_name + "'");
        }
        return cfg;
    };
    // validate the name even for an empty value list
    apply(base, param_name == "n_molecules" || param_name == "n_samples"
                    ? 2.0
                    : (param_name == "t_max" ? 1.0 : 0.0));

    std::ostringstream os;
    os << param_name
       << ",peak_intensity_per_s,delay_time_s,fwhm_s,total_photons,"
          "coherence_time_s,n_molecules,engine\n";
    for (double v : values) {
        const ScenarioResult r = run_scenario(apply(base, v));
        os << format_double(v) << ',' << format_double(r.metrics.peak_intensity)
           << ',' << format_double(r.metrics.delay_time) << ','
           << format_double(r.metrics.fwhm) << ','
           << format_double(r.metrics.total_photons) << ','
           << format_double(r.metrics.coherence_time) << ',' << r.n_molecules
           << ',' << r.engine << '\n';
    }
    return os.str();
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void write_trace_csv(std::ostream& os, const EmissionTrace& trace) {
    os << "t_s,intensity_per_s,jz_expect,coherence_abs,purity,trace_error\n";
    for (std::size_t i = 0; i < trace.size(); ++i) {
        os << format_double(trace.times[i]) << ','
           << format_double(trace.intensity[i]) << ','
           << format_double(trace.inversion[i]) << ','
           << format_double(trace.coherence[i]) << ','
           << format_double(trace.purity[i]) << ','
           << format_double(trace.trace_error[i]) << '\n';
    }
}

nlohmann::json metrics_json(const ScenarioResult& result) {
    json j;
    j["peak_intensity_per_s"] = result.metrics.peak_intensity;
    j["delay_time_s"] = result.metrics.delay_time;
    j["fwhm_s"] = result.metrics.fwhm;
    j["total_photons"] = result.metrics.total_photons;
    j["coherence_time_s"] = result.metrics.coherence_time;
    j["n_molecules"] = result.n_molecules;
    j["engine"] = result.engine;
    return j;
}

nlohmann::json comparison_json(const ComparisonReport& report) {
    json j;
    j["arm_a"] = report.a_ok ? metrics_json(report.arm_a)
                             : json{{"error", report.a_error}};
    j["arm_b"] = report.b_ok ? metrics_json(report.arm_b)
                             : json{{"error", report.b_error}};
    j["coherence_time_ratio"] = report.coherence_time_ratio;
    j["n_ratio"] = report.n_ratio;
    j["peak_ratio"] = report.peak_ratio;
    return j;
}

nlohmann::json geometry_json(const NanotubeGeometry& geom, double length_nm) {
    json j;
    j["name"] = geom.name;
    j["outer_diameter_A"] = geom.outer_diameter_A;
    j["wall_thickness_A"] = geom.wall_thickness_A;
    j["lumen_diameter_A"] = geom.lumen_diameter_A;
    j["bound_water_layer_A"] = geom.bound_water_layer_A;
    j["free_core_diameter_A"] = geom.free_core_diameter_A();
    j["axial_repeat_A"] = geom.axial_repeat_A;
    j["length_nm"] = length_nm;
    const WaterCount free = water_count(geom, length_nm, false);
    const WaterCount lumen = water_count(geom, length_nm, true);
    j["water_count_free_core"] = free.count;
    j["water_count_lumen"] = lumen.count;
    j["te11_cutoff_rad_per_s"] = lowest_mode_cutoff(geom);
    return j;
}

}  // namespace srsim
