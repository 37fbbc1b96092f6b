#include "kleinlab/transfer_matrix.hpp"

#include "kleinlab/scattering.hpp"

#include "doctest.h"

#include <cmath>
#include <random>

using namespace kleinlab;
using namespace kleinlab::tmatrix;

static const UnitSystem u{};

TEST_CASE("region propagator is unimodular and composes") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> ud(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        const double E = 1.1 + 4.0 * ud(rng);
        const double level = 6.0 * ud(rng) - 1.0;
        const double w1 = 2.0 * ud(rng), w2 = 2.0 * ud(rng);
        const auto M1 = region_propagator(E, level, w1, u);
        const auto M2 = region_propagator(E, level, w2, u);
        const auto M12 = region_propagator(E, level, w1 + w2, u);
        CHECK(std::abs(M1.det() - 1.0) < 1e-13);
        const auto P = M2 * M1;
        CHECK(std::abs(P.m00 - M12.m00) < 1e-12);
        CHECK(std::abs(P.m01 - M12.m01) < 1e-12);
        CHECK(std::abs(P.m10 - M12.m10) < 1e-12);
        CHECK(std::abs(P.m11 - M12.m11) < 1e-12);
    }
}

TEST_CASE("propagator series branch near q^2 = 0 stays unimodular") {
    for (const double eps : {1e-5, -1e-5, 1e-9, 0.0}) {
        // E - level just above/below the mass shell: q^2 = eps*(2m + eps)
        const auto M = region_propagator(1.0 + eps, 0.0, 0.3, u);
        CHECK(std::abs(M.det() - 1.0) < 1e-14);
        CHECK(M.m00 == M.m11);
    }
}

TEST_CASE("solver reproduces the closed-form step") {
    const auto sol = solve_scattering(StepPotential{4.0}, 2.0, u);
    CHECK(sol.result().T == doctest::Approx(0.75).epsilon(1e-14));
    CHECK(sol.result().R == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(sol.result().unitarity_residual < 1e-14);
    // known amplitudes for kappa = 3: r = (1-kappa)/(1+kappa) = -1/2
    CHECK(std::abs(sol.result().reflection_amplitude - cplx{-0.5, 0.0}) < 1e-14);
}

TEST_CASE("solver matches analytic coefficients across regimes") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> ud(0.0, 1.0);
    for (int i = 0; i < 300; ++i) {
        const double V = 2.3 + 5.0 * ud(rng);
        const double a = 0.2 + 2.5 * ud(rng);
        const BarrierPotential barrier{V, a};

        const double Ek = 1.0 + (V - 2.0) * (0.05 + 0.9 * ud(rng));
        const auto ana_k = analytic::barrier_coefficients(Ek, barrier, u);
        const auto num_k = solve_scattering(barrier, Ek, u).result();
        CHECK(num_k.T == doctest::Approx(ana_k.T).epsilon(1e-11));
        CHECK(num_k.R == doctest::Approx(ana_k.R).epsilon(1e-11));

        const double Ee = V - 0.9 + 0.8 * ud(rng); // evanescent window
        const auto ana_e = analytic::barrier_coefficients(Ee, barrier, u);
        const auto num_e = solve_scattering(barrier, Ee, u).result();
        CHECK(num_e.T == doctest::Approx(ana_e.T).epsilon(1e-10));
    }
}

TEST_CASE("current is conserved through the profile") {
    const auto sol = solve_scattering(BarrierPotential{4.0, 1.0}, 2.2, u);
    const double j_ref = current_density(sol.at(-5.0));
    for (const double x : {-2.0, -0.7, 0.0, 0.4, 0.93, 1.7, 6.0}) {
        CHECK(current_density(sol.at(x)) == doctest::Approx(j_ref).epsilon(1e-12));
    }
}

TEST_CASE("wavefunction satisfies the first-order Dirac system") {
    // psi' = A psi, A = [[0, -(E-V+m)], [E-V-m, 0]]; fourth-order stencil
    const double E = 2.4, V = 4.0, a = 1.0;
    const auto sol = solve_scattering(BarrierPotential{V, a}, E, u);
    const double h = 1e-3;
    for (const double x : {-1.6, -0.5, 0.31, 0.74, 2.2}) {
        const double level = (x > -a && x < a) ? V : 0.0;
        const auto f = [&](double xx) { return sol.at(xx); };
        const auto d = [&](auto get) {
            return (-get(f(x + 2 * h)) + 8.0 * get(f(x + h)) - 8.0 * get(f(x - h)) +
                    get(f(x - 2 * h))) /
                   (12.0 * h);
        };
        const cplx du = d([](const SpinorAmplitude& p) { return p.upper; });
        const cplx dl = d([](const SpinorAmplitude& p) { return p.lower; });
        const auto psi = sol.at(x);
        const cplx rhs_u = -(E - level + 1.0) * psi.lower;
        const cplx rhs_l = (E - level - 1.0) * psi.upper;
        CHECK(std::abs(du - rhs_u) < 1e-9);
        CHECK(std::abs(dl - rhs_l) < 1e-9);
    }
}

TEST_CASE("piecewise layout generalises the barrier") {
    const double E = 2.1, V = 4.0, a = 0.8;
    const PiecewisePotential same{{{-a, a, V}}, 0.0, 0.0};
    const auto direct = solve_scattering(BarrierPotential{V, a}, E, u).result();
    const auto general = solve_scattering(same, E, u).result();
    CHECK(general.T == doctest::Approx(direct.T).epsilon(1e-14));
    CHECK(general.R == doctest::Approx(direct.R).epsilon(1e-14));

    // double barrier: still unitary, wavefunction still continuous
    const PiecewisePotential twin{
        {{-1.5, -0.5, V}, {-0.5, 0.5, 0.0}, {0.5, 1.5, V}}, 0.0, 0.0};
    const auto sol = solve_scattering(twin, E, u);
    CHECK(sol.result().unitarity_residual < 1e-12);
    const double j0 = current_density(sol.at(-3.0));
    CHECK(current_density(sol.at(0.0)) == doctest::Approx(j0).epsilon(1e-11));
    CHECK(current_density(sol.at(2.0)) == doctest::Approx(j0).epsilon(1e-11));
}

TEST_CASE("unsupported configurations are refused") {
    CHECK_THROWS_AS(solve_scattering(DeltaWellPotential{1.0}, 2.0, u), DomainError);
    // gap-energy incidence
    CHECK_THROWS_AS(solve_scattering(StepPotential{4.0}, 0.9, u), DomainError);
    // evanescent exit region
    const PiecewisePotential bad{{{0.0, 1.0, 2.0}}, 0.0, 1.5};
    CHECK_THROWS_AS(solve_scattering(bad, 2.0, u), DomainError);
}

TEST_CASE("well scattering: attractive square well transmits above the gap") {
    const auto sol = solve_scattering(WellPotential{3.0, 1.0}, 1.5, u);
    CHECK(sol.result().unitarity_residual < 1e-13);
    CHECK(sol.result().T > 0.0);
    CHECK(sol.result().T <= 1.0 + 1e-13);
}
