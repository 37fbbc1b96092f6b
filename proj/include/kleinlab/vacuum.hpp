#pragma once

#include "kleinlab/transfer_matrix.hpp"
#include "kleinlab/units.hpp"

namespace kleinlab::vacuum {

// Exact scattering modes of the sharp step at Klein-zone energies, labelled
// by which side the wave comes in from.
enum class Side { left, right };

// Piecewise closed-form mode u_L / u_R evaluated at x. Amplitudes are the
// unit-flux ones (left-incident incoming piece has amplitude
// sqrt(2 kappa)/(kappa+1) * sqrt((E+m)/k)); energy-normalised modes are
// these divided by sqrt(energy_normalization).
tmatrix::SpinorAmplitude klein_mode(Side side, double E, double V,
                                    const UnitSystem& units, double x);

// delta(E - E') continuum measure: currents of energy-normalised modes are
// the unit-flux ones divided by this.
inline constexpr double energy_normalization = 6.283185307179586476925286766559;

// Current carried per unit energy by each mode family:
//   j_L = +2 kappa / (pi (kappa+1)^2)   j_R = -2 kappa / (pi (kappa+1)^2)
// i.e. current_density(klein_mode)/energy_normalization.
double mode_current(Side side, double E, double V, const UnitSystem& units);

// Which families are occupied in the filled vacuum of a supercritical step:
// only right-sided electron modes in the Klein window carry occupation.
enum class ModeFamily {
    electron_left,  // a_L: positive-energy, incident from the left
    positron_left,  // b_L
    electron_right, // a_R: incident from the right; filled for m < E < V-m
    positron_right, // b_R
};

struct VacuumFillingRule {
    double step_height;
    UnitSystem units;

    bool occupied(ModeFamily family, double E) const;
};

// Net vacuum current per unit energy assembled from the filling rule, in the
// unit-flux normalisation: (j_R - j_L)/2, which equals -T_S(E) identically.
double vacuum_current_integrand(double E, double V, const UnitSystem& units);

enum class QuadratureScheme { adaptive_gauss_kronrod, composite_gauss_legendre };

// Steady vacuum current of the step, -Int_m^{V-m} T_S dE; zero for V <= 2m.
// The two schemes are independent routes and must agree to ~1e-8.
double vacuum_current_step(double V, const UnitSystem& units,
                           QuadratureScheme scheme = QuadratureScheme::adaptive_gauss_kronrod);

// Same for the wide barrier, with the phase-averaged T_infinity as integrand.
// Strictly smaller in magnitude than the step integral.
double vacuum_current_barrier(double V, const UnitSystem& units,
                              QuadratureScheme scheme = QuadratureScheme::adaptive_gauss_kronrod);

} // namespace kleinlab::vacuum
