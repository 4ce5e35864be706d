#include "srsim/trace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "srsim/errors.hpp"

namespace srsim {

namespace {

// Vertex of the parabola through three samples; falls back to the middle
// sample when the points are collinear.
void parabola_vertex(double t0, double y0, double t1, double y1, double t2,
                     double y2, double& t_peak, double& y_peak) {
    const double d1 = (y1 - y0) / (t1 - t0);
    const double d2 = (y2 - y1) / (t2 - t1);
    const double curv = (d2 - d1) / (t2 - t0);
    if (curv >= 0.0 || !std::isfinite(curv)) {
        t_peak = t1;
        y_peak = y1;
        return;
    }
    t_peak = 0.5 * (t0 + t1 - d1 / curv);
    y_peak = y0 + d1 * (t_peak - t0) + curv * (t_peak - t0) * (t_peak - t1);
}

double trapezoid(const std::vector<double>& t, const std::vector<double>& y) {
    double acc = 0.0;
    for (std::size_t i = 1; i < t.size(); ++i) {
        acc += 0.5 * (y[i] + y[i - 1]) * (t[i] - t[i - 1]);
    }
    return acc;
}

// Linear-interpolated time where the trace crosses `level`, scanning from
// the peak outward. Returns the boundary time when no crossing exists.
double crossing_left(const std::vector<double>& t, const std::vector<double>& y,
                     std::size_t peak, double level) {
    for (std::size_t i = peak; i-- > 0;) {
        if (y[i] < level) {
            const double f = (level - y[i]) / (y[i + 1] - y[i]);
            return t[i] + f * (t[i + 1] - t[i]);
        }
    }
    return t.front();
}

double crossing_right(const std::vector<double>& t,
                      const std::vector<double>& y, std::size_t peak,
                      double level) {
    for (std::size_t i = peak + 1; i < y.size(); ++i) {
        if (y[i] < level) {
            const double f = (y[i - 1] - level) / (y[i - 1] - y[i]);
            return t[i - 1] + f * (t[i] - t[i - 1]);
        }
    }
    return t.back();
}

// Exponential time constant by least squares on ln(c) over the first decade
// of decay after the maximum. NaN when the data never spans a decade.
double fit_coherence_time(const std::vector<double>& t,
                          const std::vector<double>& c) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    const std::size_t imax = static_cast<std::size_t>(
        std::max_element(c.begin(), c.end()) - c.begin());
    const double cmax = c[imax];
    if (!(cmax > 0.0)) return nan;

    std::size_t iend = imax;
    for (std::size_t i = imax + 1; i < c.size(); ++i) {
        iend = i;
        if (c[i] < cmax / 10.0) break;
    }
    if (iend == imax || c[iend] >= cmax / 10.0) return nan;

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t n = 0;
    for (std::size_t i = imax; i <= iend; ++i) {
        if (!(c[i] > 0.0)) continue;
        const double x = t[i];
        const double y = std::log(c[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++n;
    }
    if (n < 3) return nan;
    const double denom = n * sxx - sx * sx;
    if (denom <= 0.0) return nan;
    const double slope = (n * sxy - sx * sy) / denom;
    if (slope >= 0.0) return nan;
    return -1.0 / slope;
}

}  // namespace

PulseMetrics pulse_metrics(const EmissionTrace& trace) {
    const std::size_t n = trace.size();
    if (n < 3) {
        throw ConfigError("trace too short for metric extraction");
    }

    const auto& t = trace.times;
    const auto& intensity = trace.intensity;
    const std::size_t ipk = static_cast<std::size_t>(
        std::max_element(intensity.begin(), intensity.end()) -
        intensity.begin());
    if (!(intensity[ipk] > 0.0)) {
        throw NumericError("no pulse: intensity is identically zero");
    }

    PulseMetrics m;
    if (ipk > 0 && ipk + 1 < n) {
        parabola_vertex(t[ipk - 1], intensity[ipk - 1], t[ipk], intensity[ipk],
                        t[ipk + 1], intensity[ipk + 1], m.delay_time,
                        m.peak_intensity);
    } else {
        m.delay_time = t[ipk];
        m.peak_intensity = intensity[ipk];
    }

    if (intensity.back() >= 0.05 * m.peak_intensity) {
        throw NumericError(
            "window too short: final intensity is above 5% of the peak");
    }

    const double half = 0.5 * m.peak_intensity;
    m.fwhm = crossing_right(t, intensity, ipk, half) -
             crossing_left(t, intensity, ipk, half);
    m.total_photons = trapezoid(t, intensity);
    m.coherence_time = fit_coherence_time(t, trace.coherence);
    return m;
}

std::vector<double> uniform_grid(double t_max, int n_samples) {
    if (t_max <= 0.0) {
        throw ConfigError("empty time grid: t_max must be > 0");
    }
    if (n_samples < 2) {
        throw ConfigError("time grid needs at least 2 samples");
    }
    std::vector<double> t(n_samples);
    for (int i = 0; i < n_samples; ++i) {
        t[i] = t_max * static_cast<double>(i) / (n_samples - 1);
    }
    return t;
}

}  // namespace srsim
