#include "kleinlab/scattering.hpp"

#include "doctest.h"

#include <cmath>
#include <random>

using namespace kleinlab;
using namespace kleinlab::analytic;

static const UnitSystem u{};

TEST_CASE("kinematic factor at the reference point") {
    // E = 2, V = 4: kappa = sqrt((3/1)*(3/1)) = 3
    CHECK(kinematic_kappa(2.0, 4.0, u) == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(kinematic_kappa_sq(2.0, 4.0, u) == doctest::Approx(9.0).epsilon(1e-15));
    // symmetric under E -> V - E inside the zone
    CHECK(kinematic_kappa(1.3, 4.0, u) ==
          doctest::Approx(kinematic_kappa(2.7, 4.0, u)).epsilon(1e-14));
}

TEST_CASE("signed kappa^2 covers every regime") {
    CHECK(kinematic_kappa_sq(4.5, 4.0, u) < 0.0);  // evanescent
    CHECK(kinematic_kappa_sq(10.0, 4.0, u) > 0.0); // ordinary
    // V -> 0 means no mismatch at all
    CHECK(kinematic_kappa_sq(3.0, 1e-13, u) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK_THROWS_AS(kinematic_kappa(5.0, 4.0, u), DomainError);
    CHECK_THROWS_AS(kinematic_kappa(3.0, 4.0, u), DomainError); // zone edge
}

TEST_CASE("step coefficients at the reference point") {
    const auto r = step_coefficients(2.0, StepPotential{4.0}, u);
    CHECK(r.kappa == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(r.R == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(r.T == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(r.unitarity_residual < 1e-15);
    CHECK(r.regime == Regime::propagating_klein);
}

TEST_CASE("step transmission survives arbitrarily strong steps") {
    // kappa -> sqrt((E+m)/(E-m)) as V -> infinity; T stays finite
    const double E = 2.0;
    const double kinf = std::sqrt((E + 1.0) / (E - 1.0));
    const double Tinf = 4.0 * kinf / ((1.0 + kinf) * (1.0 + kinf));
    double prev_gap = 1.0;
    for (const double V : {1e2, 1e3, 1e4}) {
        const double T = step_coefficients(E, StepPotential{V}, u).T;
        const double gap = std::abs(T - Tinf);
        CHECK(gap < prev_gap);
        prev_gap = gap;
    }
    CHECK(prev_gap < 1e-3);
}

TEST_CASE("barrier coefficients: conservation in both regimes") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> ud(0.0, 1.0);
    for (int i = 0; i < 500; ++i) {
        const double V = 2.2 + 6.0 * ud(rng);
        const double a = 0.3 + 3.0 * ud(rng);
        // Klein zone point
        const double Ek = 1.0 + (V - 2.0) * (0.05 + 0.9 * ud(rng));
        const auto rk = barrier_coefficients(Ek, BarrierPotential{V, a}, u);
        CHECK(rk.unitarity_residual < 1e-12);
        CHECK(rk.R >= 0.0);
        CHECK(rk.T >= 0.0);
        // evanescent point
        const double Ee = V - 0.95 + 0.9 * ud(rng);
        const auto re = barrier_coefficients(Ee, BarrierPotential{V, a}, u);
        CHECK(re.regime == Regime::evanescent);
        CHECK(re.unitarity_residual < 1e-12);
        CHECK(re.T > 0.0);
        CHECK(re.T < 1.0);
    }
}

TEST_CASE("evanescent transmission decays with width") {
    const double E = 3.9, V = 4.0;
    double prev = 1.0;
    for (const double a : {0.5, 1.0, 2.0, 4.0}) {
        const double T = barrier_coefficients(E, BarrierPotential{V, a}, u).T;
        CHECK(T < prev);
        prev = T;
    }
    CHECK(prev < 1e-3);
}

TEST_CASE("resonance energies of the reference barrier") {
    // V = 4, a = pi/2: E_N = 4 - sqrt(1 + N^2)
    const auto res = resonance_energies(BarrierPotential{4.0, std::acos(-1.0) / 2.0}, u);
    REQUIRE(res.size() == 2);
    CHECK(res[0].index == 1);
    CHECK(res[0].energy == doctest::Approx(4.0 - std::sqrt(2.0)).epsilon(1e-13));
    CHECK(res[1].index == 2);
    CHECK(res[1].energy == doctest::Approx(4.0 - std::sqrt(5.0)).epsilon(1e-13));
    // and the barrier really is transparent there
    for (const auto& r : res) {
        const auto c = barrier_coefficients(r.energy, BarrierPotential{4.0, std::acos(-1.0) / 2.0}, u);
        CHECK(c.T == doctest::Approx(1.0).epsilon(1e-12));
    }
    CHECK_THROWS_AS(resonance_energies(BarrierPotential{1.5, 1.0}, u), DomainError);
}

TEST_CASE("wide-barrier averaged coefficients") {
    // kappa = 3: T_inf = 72/(72+64) = 9/17
    const auto avg = averaged_coefficients(2.0, 4.0, u);
    CHECK(avg.T_infinity == doctest::Approx(9.0 / 17.0).epsilon(1e-15));
    CHECK(avg.R_infinity == doctest::Approx(8.0 / 17.0).epsilon(1e-15));
    CHECK(avg.R_infinity + avg.T_infinity == doctest::Approx(1.0).epsilon(1e-15));
    // the incoherent average equals the phase mean of 1/T inverted
    const double k2 = 9.0;
    double mean_invT = 0.0;
    const int n = 20000;
    for (int i = 0; i < n; ++i) {
        const double phase = 2.0 * std::acos(-1.0) * (i + 0.5) / n;
        const double s2 = std::sin(phase) * std::sin(phase);
        const double D = 4.0 * k2 + (1.0 - k2) * (1.0 - k2) * s2;
        mean_invT += D / (4.0 * k2);
    }
    mean_invT /= n;
    CHECK(1.0 / mean_invT == doctest::Approx(avg.T_infinity).epsilon(1e-9));
}
