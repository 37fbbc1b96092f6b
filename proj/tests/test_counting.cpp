#include "kleinlab/charge_counting.hpp"

#include "doctest.h"

#include <cmath>

using namespace kleinlab;
using namespace kleinlab::supercritical;

static const UnitSystem u{};

TEST_CASE("integer part with boundary snapping") {
    CHECK(int_part(4.7).value == 4);
    CHECK(!int_part(4.7).on_boundary);
    CHECK(int_part(5.0).value == 5);
    CHECK(int_part(5.0).on_boundary);
    // a value an ulp short of an integer still counts as on it
    CHECK(int_part(3.0 - 1e-14).value == 3);
    CHECK(int_part(3.0 - 1e-14).on_boundary);
    CHECK(int_part(2.9999).value == 2);
    CHECK(int_part(-0.3).value == -1); // floor, not truncation
    CHECK(int_part(0.0).on_boundary);
}

TEST_CASE("supercritical count: closed form and thresholds") {
    // V = 3, a = 5: (10/pi) sqrt(3) = 5.513 -> 5
    CHECK(count_supercritical(3.0, 5.0, u) == 5);
    CHECK(count_supercritical(2.0, 5.0, u) == 0); // no Klein zone yet
    CHECK(count_supercritical(1.0, 5.0, u) == 0);
    // grows with both depth and width
    CHECK(count_supercritical(4.0, 5.0, u) == 9);
    CHECK(count_supercritical(3.0, 10.0, u) == 11);
    CHECK_THROWS_AS(count_supercritical(3.0, 0.0, u), DomainError);
}

TEST_CASE("positron count bracket") {
    // V = 4, a = 5: (10/pi) sqrt(15) = 12.328 -> {12, 13}
    const auto b = count_positrons(4.0, 5.0, u);
    CHECK(b.lower == 12);
    CHECK(b.upper == 13);
    const auto none = count_positrons(0.8, 5.0, u);
    CHECK(none.lower == 0);
    CHECK(none.upper == 0);
    // the bracket always contains at least the supercritical count
    for (const double V : {2.5, 3.0, 3.7, 5.0})
        CHECK(count_positrons(V, 5.0, u).upper >= count_supercritical(V, 5.0, u));
}

TEST_CASE("critical depths") {
    // V_N^c = m + sqrt(m^2 + N^2 pi^2/4a^2)
    const double pi = std::acos(-1.0);
    CHECK(critical_potential(1, 5.0, u) ==
          doctest::Approx(1.0 + std::sqrt(1.0 + pi * pi / 100.0)).epsilon(1e-15));
    CHECK(critical_potential(3, 2.0, u) ==
          doctest::Approx(1.0 + std::sqrt(1.0 + 9.0 * pi * pi / 16.0)).epsilon(1e-15));
    // consistency: at V just above V_N^c the count is at least N
    for (int N = 1; N <= 6; ++N) {
        const double Vc = critical_potential(N, 3.0, u);
        CHECK(count_supercritical(Vc + 1e-9, 3.0, u) >= N);
        CHECK(count_supercritical(Vc - 1e-6, 3.0, u) < N);
    }
    CHECK_THROWS_AS(critical_potential(0, 5.0, u), DomainError);
    CHECK_THROWS_AS(critical_potential(1, -1.0, u), DomainError);
}

TEST_CASE("delta-well counts step at every window boundary") {
    const double pi = std::acos(-1.0);
    CHECK(delta_well_positrons(0.3) == 0);
    CHECK(delta_well_positrons(0.5 * pi + 0.01) == 1);
    CHECK(delta_well_positrons(1.5 * pi + 0.01) == 2);
    CHECK(delta_well_supercritical(0.9 * pi) == 0);
    CHECK(delta_well_supercritical(1.1 * pi) == 1);
    CHECK(delta_well_supercritical(3.2 * pi) == 3);
    // positron count leads the supercritical count by the half-window
    for (const double lam : {0.4, 1.9, 3.3, 7.0, 11.2})
        CHECK(delta_well_positrons(lam) >= delta_well_supercritical(lam));
    CHECK_THROWS_AS(delta_well_positrons(-0.1), DomainError);
}
