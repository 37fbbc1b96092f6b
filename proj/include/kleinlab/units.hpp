#pragma once

#include <stdexcept>
#include <string>

namespace kleinlab {

// Natural units: hbar = c = 1. Energies and potentials are measured in units
// of the electron mass unless a different mass is supplied; lengths in 1/mass.
struct UnitSystem {
    double mass = 1.0;

    // Half-width of the band around regime boundaries (|V-E| = m, E = m)
    // inside which kinematic quantities are refused rather than extrapolated.
    double guard_band() const { return 1e-9 * mass; }
};

// Parameter outside the physical domain of an operation (wrong regime,
// sub-gap incident energy, boundary of a regime, ...).
class DomainError : public std::domain_error {
  public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// A numerical procedure failed to converge or a grid was too coarse to
// resolve the requested structure. The message says what to refine.
class NumericalError : public std::runtime_error {
  public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace kleinlab
