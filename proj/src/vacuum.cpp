#include "kleinlab/vacuum.hpp"

#include "kleinlab/kinematics.hpp"
#include "kleinlab/quadrature.hpp"
#include "kleinlab/scattering.hpp"

#include <cmath>
#include <numbers>

namespace kleinlab::vacuum {

namespace {

constexpr std::complex<double> I{0.0, 1.0};
constexpr double pi = std::numbers::pi;

// T_S and T_infinity from the rational kappa^2, usable arbitrarily close to
// the Klein-zone edges where the guarded API refuses (the integrals need
// nodes there; both transmissions go to zero smoothly).
double step_transmission(double E, double V, double m) {
    const double k2 = (V - E + m) * (E + m) / ((V - E - m) * (E - m));
    if (!(k2 > 0.0)) // node rounded onto/past a zone edge: T vanishes there
        return 0.0;
    const double kappa = std::sqrt(k2);
    // 4 kappa/(1+kappa)^2 rewritten so kappa -> 0 or inf gives T -> 0
    // instead of inf/inf at the edge
    return 4.0 / (kappa + 2.0 + 1.0 / kappa);
}

double averaged_transmission(double E, double V, double m) {
    const double k2 = (V - E + m) * (E + m) / ((V - E - m) * (E - m));
    if (!(k2 > 0.0))
        return 0.0;
    // 8 kappa^2/(8 kappa^2 + (1-kappa^2)^2), same edge-stable rewrite
    return 8.0 / (6.0 + k2 + 1.0 / k2);
}

double integrate_klein_zone(const std::function<double(double, double, double)>& trans,
                            double V, const UnitSystem& units,
                            QuadratureScheme scheme) {
    const double m = units.mass;
    if (V <= 2.0 * m + 2.0 * units.guard_band())
        return 0.0;

    if (scheme == QuadratureScheme::adaptive_gauss_kronrod) {
        auto f = [&](double E) { return trans(E, V, m); };
        return -quad::integrate_adaptive(f, m, V - m, 1e-11).value;
    }
    // independent route: map E = m + (V-2m) sin^2 t, which absorbs the
    // sqrt edge behaviour, then fixed high-order panels
    const double w = V - 2.0 * m;
    auto g = [&](double t) {
        const double s = std::sin(t);
        const double E = m + w * s * s;
        return trans(E, V, m) * w * std::sin(2.0 * t);
    };
    return -quad::integrate_composite(g, 0.0, 0.5 * pi, 1e-11).value;
}

} // namespace

tmatrix::SpinorAmplitude klein_mode(Side side, double E, double V,
                                    const UnitSystem& units, double x) {
    const double m = units.mass;
    const double kappa = analytic::kinematic_kappa(E, V, units);
    const double k = std::sqrt(E * E - m * m);
    const double p = std::sqrt((V - E) * (V - E) - m * m);

    using cplx = std::complex<double>;
    const cplx up{0.0, 1.0}; // common i in the upper component

    if (side == Side::left) {
        if (x < 0.0) {
            const double A = std::sqrt(2.0 * kappa) / (kappa + 1.0) *
                             std::sqrt((E + m) / k);
            const cplx ph = std::exp(I * k * x);
            return {A * up * ph, A * (k / (E + m)) * ph, x};
        }
        const double C0 = std::sqrt((V - E - m) / (2.0 * p));
        const double Bp = (kappa - 1.0) / (kappa + 1.0) * C0;
        const double Bm = C0;
        const double chi = p / (E + m - V); // negative in the Klein zone
        const cplx php = std::exp(I * p * x);
        const cplx phm = std::exp(-I * p * x);
        return {(Bp * php + Bm * phm) * up, Bp * chi * php - Bm * chi * phm, x};
    }

    if (x < 0.0) {
        const double D0 = std::sqrt((E + m) / (2.0 * k));
        const double Cp = (1.0 - kappa) / (1.0 + kappa) * D0;
        const double Cm = D0;
        const double chi = k / (E + m);
        const cplx php = std::exp(I * k * x);
        const cplx phm = std::exp(-I * k * x);
        return {(Cp * php + Cm * phm) * up, Cp * chi * php - Cm * chi * phm, x};
    }
    // as printed the transmitted piece lacks the normalisation that makes the
    // mode continuous at x = 0; sqrt((V-E-m)/|p|) restores it (and with it
    // j_R = -j_L)
    const double F = std::sqrt(2.0 * kappa) / (kappa + 1.0) *
                     std::sqrt((V - E - m) / p);
    const double chi = p / (E + m - V);
    const cplx ph = std::exp(I * p * x);
    return {F * up * ph, F * chi * ph, x};
}

double mode_current(Side side, double E, double V, const UnitSystem& units) {
    const double kappa = analytic::kinematic_kappa(E, V, units);
    const double j = 2.0 * kappa / (pi * (kappa + 1.0) * (kappa + 1.0));
    return side == Side::left ? j : -j;
}

bool VacuumFillingRule::occupied(ModeFamily family, double E) const {
    if (family != ModeFamily::electron_right)
        return false;
    return klein_zone(step_height, units).contains(E);
}

double vacuum_current_integrand(double E, double V, const UnitSystem& units) {
    const VacuumFillingRule rule{V, units};
    const double jL = energy_normalization * mode_current(Side::left, E, V, units);
    const double jR = energy_normalization * mode_current(Side::right, E, V, units);
    const double nL = rule.occupied(ModeFamily::electron_left, E) ? 1.0 : 0.0;
    const double nR = rule.occupied(ModeFamily::electron_right, E) ? 1.0 : 0.0;
    // (2n-1)/2 per family: -1/2 from each empty mode, +1/2 from each filled
    return 0.5 * ((2.0 * nL - 1.0) * jL + (2.0 * nR - 1.0) * jR);
}

double vacuum_current_step(double V, const UnitSystem& units,
                           QuadratureScheme scheme) {
    return integrate_klein_zone(step_transmission, V, units, scheme);
}

double vacuum_current_barrier(double V, const UnitSystem& units,
                              QuadratureScheme scheme) {
    return integrate_klein_zone(averaged_transmission, V, units, scheme);
}

} // namespace kleinlab::vacuum
