#pragma once

#include "kleinlab/units.hpp"

namespace kleinlab::coulomb {

inline constexpr double fine_structure_default = 1.0 / 137.035999;

struct CoulombInput {
    double Z;
    double alpha = fine_structure_default;
    double energy = 0.0;      // E of the emitted positron
    double momentum = 0.0;    // p, used by the nonrelativistic form
    double gamma_ratio = 1.0; // f = |Gamma(...)| ratio prefactor, ~1
};

// Gamow suppression of positron escape from a supercritical nucleus.
// Nonrelativistic tunnelling through the Coulomb tail:
//   rho = exp(-2 pi Z alpha E / p)
double rho_nonrelativistic(const CoulombInput& in);

// Relativistic result: the exponent saturates at -2 pi Z alpha,
//   rho = f * exp(-2 pi Z alpha)
double rho_relativistic(const CoulombInput& in);

// Classical turning radius r_c = Z alpha / E below which the positron is
// born before tunnelling out.
double classical_turning_point(double Z, double alpha, double E);

} // namespace kleinlab::coulomb
