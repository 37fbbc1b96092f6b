#pragma once

#include "kleinlab/units.hpp"

#include <string>
#include <vector>

namespace kleinlab::supercritical {

struct EmissionLine {
    int index;       // N
    double momentum; // p_N = N pi / (2a)
    double energy;   // |E_N| = 2m + Delta - sqrt(p_N^2 + m^2), just above m
};

// Positron burst from a well held just past criticality, V = 2m + Delta.
struct EmissionSpectrum {
    double delta;
    double half_width;
    std::vector<EmissionLine> lines;

    long long exact_count;      // Int[(2a/pi) sqrt(Delta^2 + 2m Delta)]
    double estimated_count;     // 4 Delta a / pi  (leading order; the exact
                                // count is larger by ~sqrt(2m/Delta)/2, kept
                                // side by side rather than reconciled)
    double level_spacing_time;  // tau = 2 m a^2 / pi, emission time scale
    double sweep_time;          // tau_bar = m a / Delta, time to empty the burst
    double mean_momentum;       // p_bar = Delta

    std::vector<std::string> warnings;
};

// Valid deep in the just-supercritical regime Delta << m; warns (does not
// refuse) when Delta exceeds `regime_guard`*m or when a*Delta < 1.
EmissionSpectrum emission_spectrum(double delta, double a, const UnitSystem& units,
                                   double regime_guard = 0.2);

} // namespace kleinlab::supercritical
