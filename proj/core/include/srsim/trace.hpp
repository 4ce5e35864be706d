#pragma once

#include <vector>

namespace srsim {

/// Observable record of one run. All arrays share the time grid.
struct EmissionTrace {
    std::vector<double> times;       // s, strictly increasing
    std::vector<double> intensity;   // photons/s, gamma <J+ J->
    std::vector<double> inversion;   // <J_z>
    std::vector<double> coherence;   // |<J+>|
    std::vector<double> purity;      // Tr rho^2
    std::vector<double> trace_error; // |Tr rho - 1|

    std::size_t size() const { return times.size(); }
};

/// Derived burst observables.
struct PulseMetrics {
    double peak_intensity = 0.0;  // photons/s
    double delay_time = 0.0;      // s, time of peak
    double fwhm = 0.0;            // s
    double total_photons = 0.0;   // integral of intensity
    double coherence_time = 0.0;  // s, NaN when no decade of decay to fit
};

/// Metric extraction. Requires the burst to be captured: final intensity
/// below 5% of the peak. Throws NumericError("no pulse") on identically
/// zero intensity and ("window too short") on an uncaptured burst.
PulseMetrics pulse_metrics(const EmissionTrace& trace);

/// Uniform grid of n_samples points over [0, t_max], first point at 0.
std::vector<double> uniform_grid(double t_max, int n_samples);

}  // namespace srsim
