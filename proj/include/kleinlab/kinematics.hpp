#pragma once

#include "kleinlab/units.hpp"

namespace kleinlab {

// Regime of a constant region at level V seen by a particle of energy E:
//   propagating_ordinary : E > V + m   (interior wave in the upper continuum)
//   propagating_klein    : E < V - m   (interior wave overlaps the lower
//                                       continuum; group velocity and momentum
//                                       label point in opposite directions)
//   evanescent           : |V - E| < m (no interior propagation)
// The boundaries |V - E| = m are treated as errors, not limits.
enum class Regime { propagating_ordinary, propagating_klein, evanescent };

struct Momenta {
    double k = 0.0;     // free-space momentum sqrt(E^2 - m^2), 0 if |E| <= m
    double p_mag = 0.0; // interior |p|; decay constant when evanescent
    Regime regime = Regime::propagating_ordinary;
    int group_velocity_sign = +1;  // right-moving branch, by construction
    int momentum_label_sign = +1;  // -1 in the Klein regime (Pauli convention)

    // Momentum label of the right-moving interior wave.
    double signed_p() const { return momentum_label_sign * p_mag; }
};

enum class RegionRole { asymptotic, interior };

// Classify the region at `potential_level` for energy E and compute momenta.
// Asymptotic regions require E > m (an incident electron above the gap);
// interior regions accept any E.
Momenta momenta_for(double E, double potential_level, const UnitSystem& units,
                    RegionRole role = RegionRole::interior);

// Energy window m < E < V - m in which an electron incident on a step of
// height V tunnels into the lower continuum. Empty unless V > 2m.
struct KleinZone {
    double E_min;
    double E_max;

    bool empty() const { return !(E_max > E_min); }
    bool contains(double E) const { return E > E_min && E < E_max; }
};

KleinZone klein_zone(double step_height, const UnitSystem& units);

// Nonrelativistic equivalent potential (2EV - V^2)/(2m): the potential a
// Schroedinger particle would need to see to mimic the Dirac problem.
double effective_potential(double V, double E, const UnitSystem& units);

} // namespace kleinlab
