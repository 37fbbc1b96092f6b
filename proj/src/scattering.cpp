#include "kleinlab/scattering.hpp"

#include <cmath>
#include <numbers>

namespace kleinlab::analytic {

namespace {

void require_klein_zone(double E, double V, const UnitSystem& u) {
    const double m = u.mass, g = u.guard_band();
    if (!(E > m + g) || !(E < V - m - g))
        throw DomainError("kappa defined only in Klein zone");
}

} // namespace

double kinematic_kappa(double E, double V, const UnitSystem& units) {
    require_klein_zone(E, V, units);
    const double m = units.mass;
    return std::sqrt((V - E + m) / (V - E - m) * (E + m) / (E - m));
}

double kinematic_kappa_sq(double E, double V, const UnitSystem& units) {
    const double m = units.mass, g = units.guard_band();
    if (!(E > m + g))
        throw DomainError("incident energy below gap");
    const double d = V - E;
    if (std::abs(std::abs(d) - m) < g)
        throw DomainError("regime boundary |V - E| = m");
    return (d + m) * (E + m) / ((d - m) * (E - m));
}

ScatteringResult step_coefficients(double E, const StepPotential& step,
                                   const UnitSystem& units) {
    const double m = units.mass;
    const double V = step.height;
    const double kappa = kinematic_kappa(E, V, units);

    ScatteringResult out;
    out.kappa = kappa;
    out.kappa_sq = kappa * kappa;
    out.k = std::sqrt(E * E - m * m);
    out.p = std::sqrt((V - E) * (V - E) - m * m);
    out.regime = Regime::propagating_klein;
    out.R = (1.0 - kappa) * (1.0 - kappa) / ((1.0 + kappa) * (1.0 + kappa));
    out.T = 4.0 * kappa / ((1.0 + kappa) * (1.0 + kappa));
    out.unitarity_residual = std::abs(out.R + out.T - 1.0);
    return out;
}

ScatteringResult barrier_coefficients(double E, const BarrierPotential& barrier,
                                      const UnitSystem& units) {
    const double m = units.mass;
    const double V = barrier.height;
    const double a = barrier.half_width;

    const double k2 = kinematic_kappa_sq(E, V, units); // signed
    const double d = V - E;
    const double q2 = d * d - m * m; // interior momentum^2, signed

    ScatteringResult out;
    out.kappa_sq = k2;
    out.kappa = std::sqrt(std::abs(k2));
    out.k = std::sqrt(E * E - m * m);
    out.p = std::sqrt(std::abs(q2));

    double s2; // sin^2(2pa), continued to -sinh^2(2|p|a) between the continua
    if (q2 >= 0.0) {
        out.regime = (E < V - m) ? Regime::propagating_klein : Regime::propagating_ordinary;
        const double s = std::sin(2.0 * out.p * a);
        s2 = s * s;
    } else {
        out.regime = Regime::evanescent;
        const double sh = std::sinh(2.0 * out.p * a);
        s2 = -sh * sh;
    }

    const double one_minus = (1.0 - k2) * (1.0 - k2);
    const double denom = 4.0 * k2 + one_minus * s2;
    out.R = one_minus * s2 / denom;
    out.T = 4.0 * k2 / denom;
    out.unitarity_residual = std::abs(out.R + out.T - 1.0);
    return out;
}

std::vector<Resonance> resonance_energies(const BarrierPotential& barrier,
                                          const UnitSystem& units) {
    const double m = units.mass, g = units.guard_band();
    const double V = barrier.height;
    const double a = barrier.half_width;
    if (!(V > 2.0 * m))
        throw DomainError("no Klein zone: barrier height must exceed 2m");

    std::vector<Resonance> out;
    const double pi = std::numbers::pi;
    for (int N = 1;; ++N) {
        const double pN = N * pi / (2.0 * a);
        const double E = V - std::sqrt(m * m + pN * pN);
        if (E <= m + g)
            break;
        out.push_back({N, E});
    }
    return out;
}

AveragedCoefficients averaged_coefficients(double E, double V, const UnitSystem& units) {
    const double kappa = kinematic_kappa(E, V, units);
    const double k2 = kappa * kappa;
    const double one_minus = (1.0 - k2) * (1.0 - k2);
    const double denom = 8.0 * k2 + one_minus;
    return {one_minus / denom, 8.0 * k2 / denom};
}

} // namespace kleinlab::analytic
