#include "kleinlab/kinematics.hpp"

#include <cmath>

namespace kleinlab {

Momenta momenta_for(double E, double potential_level, const UnitSystem& units,
                    RegionRole role) {
    const double m = units.mass;
    const double g = units.guard_band();

    if (role == RegionRole::asymptotic && E <= m + g)
        throw DomainError("incident energy below gap");

    const double d = potential_level - E; // V - E
    if (std::abs(std::abs(d) - m) < g)
        throw DomainError("regime boundary |V - E| = m");

    Momenta out;
    if (E * E > m * m)
        out.k = std::sqrt(E * E - m * m);

    if (std::abs(d) < m) {
        out.regime = Regime::evanescent;
        out.p_mag = std::sqrt(m * m - d * d);
        out.momentum_label_sign = +1; // decaying branch; no propagation
    } else {
        out.p_mag = std::sqrt(d * d - m * m);
        if (E < potential_level - m) {
            out.regime = Regime::propagating_klein;
            out.momentum_label_sign = -1;
        } else {
            out.regime = Regime::propagating_ordinary;
            out.momentum_label_sign = +1;
        }
    }
    out.group_velocity_sign = +1;
    return out;
}

KleinZone klein_zone(double step_height, const UnitSystem& units) {
    return KleinZone{units.mass, step_height - units.mass};
}

double effective_potential(double V, double E, const UnitSystem& units) {
    return (2.0 * E * V - V * V) / (2.0 * units.mass);
}

} // namespace kleinlab
