#include "kleinlab/emission.hpp"

#include "doctest.h"

#include <cmath>

using namespace kleinlab;
using namespace kleinlab::supercritical;

static const UnitSystem u{};

TEST_CASE("burst from a just-supercritical wide well: Delta = 0.1, a = 100") {
    const auto spec = emission_spectrum(0.1, 100.0, u);
    CHECK(spec.exact_count == 29);
    CHECK(spec.lines.size() == 29);
    CHECK(spec.estimated_count == doctest::Approx(40.0 / std::acos(-1.0)).epsilon(1e-14));
    CHECK(spec.level_spacing_time ==
          doctest::Approx(20000.0 / std::acos(-1.0)).epsilon(1e-14));
    CHECK(spec.sweep_time == doctest::Approx(1000.0).epsilon(1e-14));
    CHECK(spec.mean_momentum == doctest::Approx(0.1).epsilon(1e-15));
    CHECK(spec.warnings.empty());

    const double pi = std::acos(-1.0);
    for (const auto& line : spec.lines) {
        CHECK(line.momentum ==
              doctest::Approx(line.index * pi / 200.0).epsilon(1e-14));
        // emitted energies crowd just above the gap edge
        CHECK(line.energy > 1.0);
        CHECK(line.energy < 1.1);
        CHECK(line.energy == doctest::Approx(2.1 - std::sqrt(line.momentum * line.momentum +
                                                             1.0))
                                 .epsilon(1e-14));
    }
    // deeper lines carry more momentum, less energy
    for (std::size_t i = 1; i < spec.lines.size(); ++i) {
        CHECK(spec.lines[i].momentum > spec.lines[i - 1].momentum);
        CHECK(spec.lines[i].energy < spec.lines[i - 1].energy);
    }
}

TEST_CASE("a count argument on an integer boundary drops the edge line") {
    // choose a so that (2a/pi) sqrt(Delta^2 + 2 Delta) = 3 exactly: the third
    // level sits at the continuum edge and has not detached
    const double delta = 0.1;
    const double arg_unit = std::sqrt(delta * delta + 2.0 * delta);
    const double a = 3.0 * std::acos(-1.0) / (2.0 * arg_unit);
    const auto spec = emission_spectrum(delta, a, u);
    CHECK(spec.exact_count == 2);
    CHECK(spec.lines.size() == 2);
}

TEST_CASE("regime warnings") {
    CHECK(!emission_spectrum(0.5, 100.0, u).warnings.empty());  // Delta not small
    CHECK(!emission_spectrum(0.05, 10.0, u).warnings.empty());  // a*Delta < 1
    CHECK(emission_spectrum(0.15, 40.0, u).warnings.empty());
    // custom guard tightens the first warning
    CHECK(!emission_spectrum(0.15, 40.0, u, 0.1).warnings.empty());
}

TEST_CASE("domain") {
    CHECK_THROWS_AS(emission_spectrum(0.0, 10.0, u), DomainError);
    CHECK_THROWS_AS(emission_spectrum(-0.2, 10.0, u), DomainError);
    CHECK_THROWS_AS(emission_spectrum(0.1, 0.0, u), DomainError);
    // tiny but positive Delta: no lines yet, structure still valid
    const auto spec = emission_spectrum(1e-6, 1.0, u);
    CHECK(spec.exact_count == 0);
    CHECK(spec.lines.empty());
    CHECK(spec.estimated_count < 1.0);
}
