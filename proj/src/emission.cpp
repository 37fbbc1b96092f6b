#include "kleinlab/emission.hpp"

#include "kleinlab/charge_counting.hpp"

#include <cmath>
#include <numbers>

namespace kleinlab::supercritical {

EmissionSpectrum emission_spectrum(double delta, double a, const UnitSystem& units,
                                   double regime_guard) {
    const double m = units.mass;
    const double pi = std::numbers::pi;
    if (!(delta > 0.0))
        throw DomainError("well is not supercritical: Delta must be positive");
    if (!(a > 0.0))
        throw DomainError("well half-width must be positive");

    EmissionSpectrum out;
    out.delta = delta;
    out.half_width = a;

    if (delta > regime_guard * m)
        out.warnings.push_back("Delta exceeds the just-supercritical regime; "
                               "estimates assume Delta << m");
    if (a * delta < 1.0)
        out.warnings.push_back("a*Delta < 1: too few supercritical levels for the "
                               "burst estimates to be meaningful");

    const double arg = 2.0 * a / pi * std::sqrt(delta * delta + 2.0 * m * delta);
    const IntPart ip = int_part(arg);
    // a boundary argument means the last level sits exactly at |E| = m; it
    // has not detached from the continuum edge, so it is not emitted
    long long n_max = ip.on_boundary ? ip.value - 1 : ip.value;
    if (n_max < 0)
        n_max = 0;
    out.exact_count = n_max;

    const double V = 2.0 * m + delta;
    for (int N = 1; N <= n_max; ++N) {
        const double pN = N * pi / (2.0 * a);
        out.lines.push_back({N, pN, V - std::sqrt(pN * pN + m * m)});
    }

    out.estimated_count = 4.0 * delta * a / pi;
    out.level_spacing_time = 2.0 * m * a * a / pi;
    out.sweep_time = m * a / delta;
    out.mean_momentum = delta;
    return out;
}

} // namespace kleinlab::supercritical
