#include "kleinlab/charge_counting.hpp"

#include <cmath>
#include <numbers>

namespace kleinlab::supercritical {

namespace {
constexpr double pi = std::numbers::pi;
}

IntPart int_part(double x) {
    const double nearest = std::nearbyint(x);
    if (std::abs(x - nearest) <= 1e-12 * std::max(1.0, std::abs(x)))
        return {static_cast<long long>(nearest), true};
    return {static_cast<long long>(std::floor(x)), false};
}

double critical_potential(int N, double a, const UnitSystem& units) {
    if (N < 1)
        throw DomainError("level index N must be >= 1");
    if (!(a > 0.0))
        throw DomainError("well half-width must be positive");
    const double m = units.mass;
    const double pN = N * pi / (2.0 * a);
    return m + std::sqrt(m * m + pN * pN);
}

long long count_supercritical(double V, double a, const UnitSystem& units) {
    if (!(a > 0.0))
        throw DomainError("well half-width must be positive");
    const double m = units.mass;
    if (V <= 2.0 * m)
        return 0;
    return int_part(2.0 * a / pi * std::sqrt(V * V - 2.0 * m * V)).value;
}

PositronBracket count_positrons(double V, double a, const UnitSystem& units) {
    if (!(a > 0.0))
        throw DomainError("well half-width must be positive");
    const double m = units.mass;
    if (V <= m)
        return {0, 0};
    const long long base = int_part(2.0 * a / pi * std::sqrt(V * V - m * m)).value;
    return {base, base + 1};
}

long long delta_well_positrons(double lambda) {
    if (lambda < 0.0)
        throw DomainError("delta-well strength must be non-negative");
    return int_part(lambda / pi + 0.5).value;
}

long long delta_well_supercritical(double lambda) {
    if (lambda < 0.0)
        throw DomainError("delta-well strength must be non-negative");
    return int_part(lambda / pi).value;
}

ChargeLedger ledger_at(const spectrum::SpectralFlow& flow, double depth) {
    ChargeLedger out;
    out.depth = depth;
    out.particle_charge = flow.crossings(spectrum::CrossingType::zero_energy, depth);
    out.supercritical_count =
        flow.crossings(spectrum::CrossingType::lower_continuum, depth);
    out.vacuum_charge = -out.particle_charge;
    return out;
}

} // namespace kleinlab::supercritical
