#pragma once

#include "kleinlab/bound_states.hpp"
#include "kleinlab/units.hpp"

#include <vector>

namespace kleinlab::spectrum {

enum class CrossingType {
    zero_energy,     // level dives through E = 0: well acquires unit charge
    lower_continuum, // level reaches E = -m: state goes supercritical
};

struct CrossingEvent {
    CrossingType type;
    Parity parity;
    int branch_index;
    double depth; // well depth V at which the crossing happens
};

struct RampSlice {
    double depth;
    std::vector<BoundState> states;
};

struct SpectralFlow {
    double half_width = 0.0;
    std::vector<RampSlice> slices;
    std::vector<CrossingEvent> events; // sorted by depth

    long crossings(CrossingType type, double up_to_depth) const;
};

// Adiabatically deepen the well from 0 to V_max on n_steps slices, track
// every level by (parity, tangent branch), and record each E = 0 and E = -m
// crossing with its depth refined by bisection to ~1e-12 relative.
//
// The slice spacing must resolve the flow: a level needs ~2m of depth to
// traverse the gap and |dE/dV| <= 1, so the tracker demands
// dV <= m/4 and errors out (asking for more steps) otherwise, as it does if
// a tracked level jumps by more than the adaptive pairing guard.
SpectralFlow ramp_spectrum(double V_max, int n_steps, double a,
                           const UnitSystem& units, double tol = 1e-12);

} // namespace kleinlab::spectrum
