#include "kleinlab/coulomb.hpp"

#include <cmath>
#include <numbers>

namespace kleinlab::coulomb {

namespace {

void require_charge(double Z, double alpha) {
    if (!(Z > 0.0))
        throw DomainError("nuclear charge Z must be positive");
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw DomainError("fine-structure constant must lie in (0, 1)");
}

} // namespace

double rho_nonrelativistic(const CoulombInput& in) {
    require_charge(in.Z, in.alpha);
    if (!(in.momentum > 0.0))
        throw DomainError("positron momentum must be positive");
    if (!(in.energy > 0.0))
        throw DomainError("positron energy must be positive");
    return std::exp(-2.0 * std::numbers::pi * in.Z * in.alpha * in.energy / in.momentum);
}

double rho_relativistic(const CoulombInput& in) {
    require_charge(in.Z, in.alpha);
    if (!(in.gamma_ratio > 0.0))
        throw DomainError("gamma-function prefactor must be positive");
    return in.gamma_ratio * std::exp(-2.0 * std::numbers::pi * in.Z * in.alpha);
}

double classical_turning_point(double Z, double alpha, double E) {
    require_charge(Z, alpha);
    if (!(E > 0.0))
        throw DomainError("positron energy must be positive");
    return Z * alpha / E;
}

} // namespace kleinlab::coulomb
