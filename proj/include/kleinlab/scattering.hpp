#pragma once

#include "kleinlab/kinematics.hpp"
#include "kleinlab/potential.hpp"
#include "kleinlab/units.hpp"

#include <vector>

namespace kleinlab::analytic {

struct ScatteringResult {
    double R = 0.0;
    double T = 0.0;
    double kappa = 0.0;    // |kappa|; kappa itself is imaginary when evanescent
    double kappa_sq = 0.0; // signed kappa^2, negative in the evanescent regime
    double k = 0.0;        // incident momentum
    double p = 0.0;        // interior momentum magnitude (decay constant if evanescent)
    Regime regime = Regime::propagating_klein;
    double unitarity_residual = 0.0; // |R + T - 1|
};

// Kinematic mismatch factor for a step of height V at Klein-zone energy E:
//   kappa = sqrt( (V-E+m)/(V-E-m) * (E+m)/(E-m) )
// Computed from this manifestly positive form only. Defined only inside the
// Klein zone (guard band excluded).
double kinematic_kappa(double E, double V, const UnitSystem& units);

// Signed kappa^2 as a rational function of (E, V); valid in every regime with
// E > m, and negative between the continua (|V-E| < m). Agrees with
// kinematic_kappa^2 inside the Klein zone.
double kinematic_kappa_sq(double E, double V, const UnitSystem& units);

// Sharp step: R = ((1-kappa)/(1+kappa))^2, T = 4 kappa/(1+kappa)^2.
// Klein zone only. Transmission survives V -> infinity (Klein paradox).
ScatteringResult step_coefficients(double E, const StepPotential& step,
                                   const UnitSystem& units);

// Square barrier of height V, half-width a:
//   R = (1-kappa^2)^2 sin^2(2pa) / D,  T = 4 kappa^2 / D,
//   D = 4 kappa^2 + (1-kappa^2)^2 sin^2(2pa)
// with the evanescent regime reached by analytic continuation
// (sin -> i sinh together with kappa^2 < 0). Valid for all E > m away from
// the regime boundaries E = V -+ m.
ScatteringResult barrier_coefficients(double E, const BarrierPotential& barrier,
                                      const UnitSystem& units);

struct Resonance {
    int index;     // N in 2pa = N pi
    double energy; // E_N = V - sqrt(m^2 + N^2 pi^2 / (4a^2))
};

// Transmission resonances (T = 1) of the barrier inside the Klein zone,
// ordered by decreasing energy.
std::vector<Resonance> resonance_energies(const BarrierPotential& barrier,
                                          const UnitSystem& units);

struct AveragedCoefficients {
    double R_infinity; // (1-kappa^2)^2 / (8 kappa^2 + (1-kappa^2)^2)
    double T_infinity; // 8 kappa^2     / (8 kappa^2 + (1-kappa^2)^2)
};

// Wide-barrier limit: intensity average over the interior phase 2pa.
// (Equivalently: invert the phase average of 1/T; the direct mean of T is a
// different, larger number.) Klein zone only.
AveragedCoefficients averaged_coefficients(double E, double V, const UnitSystem& units);

} // namespace kleinlab::analytic
