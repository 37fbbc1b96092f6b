#pragma once

#include "kleinlab/units.hpp"

#include <vector>

namespace kleinlab::spectrum {

enum class Parity { even, odd };

struct BoundState {
    double energy;        // in (-m, m)
    Parity parity;
    int branch_index;     // tangent branch: pa in (k*pi - pi/2, k*pi + pi/2)
    double well_momentum; // p = sqrt((E+V)^2 - m^2)
    double residual;      // |phase matching residual| at the root
    bool at_boundary;     // |E -+ m| within the guard band (threshold state)
};

// Matching conditions for the square well of depth V (potential -V on
// |x| < a), written as tan(pa) = S(E):
//   even:  S = +sqrt( (m-E)(E+V+m) / ((m+E)(E+V-m)) )
//   odd:   S = -sqrt( (m+E)(E+V+m) / ((m-E)(E+V-m)) )
// These raw residuals tan(pa) - S blow up at the tangent poles; root finding
// uses the equivalent bounded phase form sin(pa - phi) below.
double even_residual(double E, double V, double a, const UnitSystem& units);
double odd_residual(double E, double V, double a, const UnitSystem& units);

// Bounded reformulation: the matching condition is pa = phi(E) (mod pi) with
// phi = atan2-combined numerator/denominator of S, so the residual
// sin(pa - phi) is smooth across tangent poles and lies in [-1, 1].
double matching_residual(Parity parity, double E, double V, double a,
                         const UnitSystem& units);

// Phase pa - phi (even) or pa + phi (odd); roots sit exactly at branch*pi.
// Strictly increasing in E for the even parity. Exposed for the
// spectral-flow tracker.
double matching_phase(Parity parity, double E, double V, double a,
                      const UnitSystem& units);

// All bound states in (-m, m), both parities, sorted by increasing energy,
// deduplicated within 1e-12*m. Threshold states are flagged, not dropped.
std::vector<BoundState> find_bound_states(double V, double a, const UnitSystem& units,
                                          double tol = 1e-12);

struct DeltaWellLevels {
    double even_energy;   //  m cos(lambda)
    double odd_energy;    // -m cos(lambda)
    Parity active_parity; // parity of the state currently traversing the gap
    double active_energy; // its energy, m cos(lambda mod pi)
};

// Levels of the delta well -lambda*delta(x). As lambda grows, one level at a
// time sweeps the gap from +m to -m, alternating parity on successive
// windows (k*pi, (k+1)*pi); at most one bound positron state exists at once.
DeltaWellLevels delta_well_states(double lambda, const UnitSystem& units);

} // namespace kleinlab::spectrum
