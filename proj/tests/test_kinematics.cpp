#include "kleinlab/kinematics.hpp"

#include "doctest.h"

#include <cmath>

using namespace kleinlab;

static const UnitSystem u{};

TEST_CASE("free momentum and regime classification") {
    const auto free_m = momenta_for(2.0, 0.0, u, RegionRole::asymptotic);
    CHECK(free_m.k == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
    CHECK(free_m.regime == Regime::propagating_ordinary);
    CHECK(free_m.momentum_label_sign == 1);

    SUBCASE("ordinary interior: E well above the region top") {
        const auto m = momenta_for(5.0, 1.0, u);
        CHECK(m.regime == Regime::propagating_ordinary);
        CHECK(m.p_mag == doctest::Approx(std::sqrt(15.0)).epsilon(1e-15));
        CHECK(m.signed_p() > 0.0);
    }
    SUBCASE("Klein interior: E below the region top by more than m") {
        const auto m = momenta_for(2.0, 4.0, u);
        CHECK(m.regime == Regime::propagating_klein);
        CHECK(m.p_mag == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
        // Pauli convention: label runs against the group velocity
        CHECK(m.signed_p() < 0.0);
        CHECK(m.group_velocity_sign == 1);
    }
    SUBCASE("evanescent interior") {
        const auto m = momenta_for(3.5, 4.0, u);
        CHECK(m.regime == Regime::evanescent);
        CHECK(m.p_mag == doctest::Approx(std::sqrt(1.0 - 0.25)).epsilon(1e-15));
    }
}

TEST_CASE("guarded boundaries refuse rather than extrapolate") {
    CHECK_THROWS_AS(momenta_for(3.0, 4.0, u), DomainError);      // |V-E| = m
    CHECK_THROWS_AS(momenta_for(5.0, 4.0, u), DomainError);      // |V-E| = m
    CHECK_THROWS_AS(momenta_for(1.0, 0.0, u, RegionRole::asymptotic), DomainError);
    CHECK_THROWS_AS(momenta_for(0.5, 0.0, u, RegionRole::asymptotic), DomainError);
    CHECK_NOTHROW(momenta_for(0.5, 4.0, u)); // interior regions take any E
}

TEST_CASE("Klein zone window") {
    const auto z = klein_zone(4.0, u);
    CHECK(z.E_min == 1.0);
    CHECK(z.E_max == 3.0);
    CHECK(z.contains(2.0));
    CHECK(!z.contains(3.5));
    CHECK(klein_zone(1.5, u).empty());
    CHECK(klein_zone(2.0, u).empty());
}

TEST_CASE("Schroedinger-equivalent potential flips sign with energy") {
    // 2m V_eff = 2EV - V^2: repulsive for E > V/2, attractive for E < V/2
    CHECK(effective_potential(4.0, 3.0, u) == doctest::Approx(4.0));
    CHECK(effective_potential(4.0, 1.0, u) == doctest::Approx(-4.0));
    CHECK(effective_potential(4.0, 2.0, u) == doctest::Approx(0.0));
    // scales with 1/m
    const UnitSystem heavy{2.0};
    CHECK(effective_potential(4.0, 3.0, heavy) == doctest::Approx(2.0));
}
