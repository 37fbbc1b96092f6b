#include "kleinlab/bound_states.hpp"
#include "kleinlab/charge_counting.hpp"
#include "kleinlab/coulomb.hpp"
#include "kleinlab/emission.hpp"
#include "kleinlab/kinematics.hpp"
#include "kleinlab/potential.hpp"
#include "kleinlab/scattering.hpp"
#include "kleinlab/transfer_matrix.hpp"
#include "kleinlab/units.hpp"
#include "kleinlab/vacuum.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>

namespace py = pybind11;
using namespace kleinlab;

namespace {

UnitSystem units_for(double mass) {
    if (!(mass > 0.0))
        throw std::invalid_argument("mass must be positive");
    return UnitSystem{mass};
}

vacuum::QuadratureScheme scheme_from(const std::string& name) {
    if (name == "adaptive")
        return vacuum::QuadratureScheme::adaptive_gauss_kronrod;
    if (name == "composite")
        return vacuum::QuadratureScheme::composite_gauss_legendre;
    throw std::invalid_argument("scheme must be 'adaptive' or 'composite'");
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Scattering, bound-state, and vacuum-current calculations for the "
              "one-dimensional Dirac equation with sharp rectangular potentials";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<NumericalError>(m, "NumericalError", PyExc_RuntimeError);

    py::enum_<Regime>(m, "Regime")
        .value("propagating_ordinary", Regime::propagating_ordinary)
        .value("propagating_klein", Regime::propagating_klein)
        .value("evanescent", Regime::evanescent);

    py::class_<analytic::ScatteringResult>(m, "ScatteringResult")
        .def_readonly("R", &analytic::ScatteringResult::R)
        .def_readonly("T", &analytic::ScatteringResult::T)
        .def_readonly("kappa", &analytic::ScatteringResult::kappa)
        .def_readonly("kappa_sq", &analytic::ScatteringResult::kappa_sq)
        .def_readonly("k", &analytic::ScatteringResult::k)
        .def_readonly("p", &analytic::ScatteringResult::p)
        .def_readonly("regime", &analytic::ScatteringResult::regime)
        .def_readonly("unitarity_residual", &analytic::ScatteringResult::unitarity_residual)
        .def("__repr__", [](const analytic::ScatteringResult& r) {
            return "ScatteringResult(R=" + std::to_string(r.R) +
                   ", T=" + std::to_string(r.T) + ")";
        });

    py::class_<tmatrix::SolverResult>(m, "SolverResult")
        .def_readonly("R", &tmatrix::SolverResult::R)
        .def_readonly("T", &tmatrix::SolverResult::T)
        .def_readonly("reflection_amplitude", &tmatrix::SolverResult::reflection_amplitude)
        .def_readonly("transmission_amplitude", &tmatrix::SolverResult::transmission_amplitude)
        .def_readonly("unitarity_residual", &tmatrix::SolverResult::unitarity_residual)
        .def("__repr__", [](const tmatrix::SolverResult& r) {
            return "SolverResult(R=" + std::to_string(r.R) +
                   ", T=" + std::to_string(r.T) + ")";
        });

    py::class_<analytic::AveragedCoefficients>(m, "AveragedCoefficients")
        .def_readonly("R_infinity", &analytic::AveragedCoefficients::R_infinity)
        .def_readonly("T_infinity", &analytic::AveragedCoefficients::T_infinity);

    py::class_<analytic::Resonance>(m, "Resonance")
        .def_readonly("index", &analytic::Resonance::index)
        .def_readonly("energy", &analytic::Resonance::energy);

    py::enum_<spectrum::Parity>(m, "Parity")
        .value("even", spectrum::Parity::even)
        .value("odd", spectrum::Parity::odd);

    py::class_<spectrum::BoundState>(m, "BoundState")
        .def_readonly("energy", &spectrum::BoundState::energy)
        .def_readonly("parity", &spectrum::BoundState::parity)
        .def_readonly("branch_index", &spectrum::BoundState::branch_index)
        .def_readonly("well_momentum", &spectrum::BoundState::well_momentum)
        .def_readonly("residual", &spectrum::BoundState::residual)
        .def_readonly("at_boundary", &spectrum::BoundState::at_boundary)
        .def("__repr__", [](const spectrum::BoundState& s) {
            return "BoundState(energy=" + std::to_string(s.energy) + ", parity=" +
                   (s.parity == spectrum::Parity::even ? "even" : "odd") + ")";
        });

    py::class_<spectrum::DeltaWellLevels>(m, "DeltaWellLevels")
        .def_readonly("even_energy", &spectrum::DeltaWellLevels::even_energy)
        .def_readonly("odd_energy", &spectrum::DeltaWellLevels::odd_energy)
        .def_readonly("active_parity", &spectrum::DeltaWellLevels::active_parity)
        .def_readonly("active_energy", &spectrum::DeltaWellLevels::active_energy);

    py::class_<supercritical::EmissionLine>(m, "EmissionLine")
        .def_readonly("index", &supercritical::EmissionLine::index)
        .def_readonly("momentum", &supercritical::EmissionLine::momentum)
        .def_readonly("energy", &supercritical::EmissionLine::energy);

    py::class_<supercritical::EmissionSpectrum>(m, "EmissionSpectrum")
        .def_readonly("delta", &supercritical::EmissionSpectrum::delta)
        .def_readonly("half_width", &supercritical::EmissionSpectrum::half_width)
        .def_readonly("lines", &supercritical::EmissionSpectrum::lines)
        .def_readonly("exact_count", &supercritical::EmissionSpectrum::exact_count)
        .def_readonly("estimated_count", &supercritical::EmissionSpectrum::estimated_count)
        .def_readonly("level_spacing_time", &supercritical::EmissionSpectrum::level_spacing_time)
        .def_readonly("sweep_time", &supercritical::EmissionSpectrum::sweep_time)
        .def_readonly("mean_momentum", &supercritical::EmissionSpectrum::mean_momentum)
        .def_readonly("warnings", &supercritical::EmissionSpectrum::warnings);

    m.def(
        "kappa",
        [](double E, double V, double mass) {
            return analytic::kinematic_kappa(E, V, units_for(mass));
        },
        py::arg("E"), py::arg("V"), py::arg("mass") = 1.0,
        "Kinematic mismatch factor of a Klein-zone step");

    m.def(
        "kappa_sq",
        [](double E, double V, double mass) {
            return analytic::kinematic_kappa_sq(E, V, units_for(mass));
        },
        py::arg("E"), py::arg("V"), py::arg("mass") = 1.0,
        "Signed kappa^2, negative in the evanescent regime");

    m.def(
        "effective_potential",
        [](double V, double E, double mass) {
            return effective_potential(V, E, units_for(mass));
        },
        py::arg("V"), py::arg("E"), py::arg("mass") = 1.0,
        "Schroedinger-equivalent potential (V^2 - 2EV)/(2m) of a step of height V");

    m.def(
        "step",
        [](double E, double V, double mass) {
            return analytic::step_coefficients(E, StepPotential{V}, units_for(mass));
        },
        py::arg("E"), py::arg("V"), py::arg("mass") = 1.0,
        "Reflection/transmission at a sharp step, Klein zone");

    m.def(
        "barrier",
        [](double E, double V, double a, double mass) {
            return analytic::barrier_coefficients(E, BarrierPotential{V, a},
                                                  units_for(mass));
        },
        py::arg("E"), py::arg("V"), py::arg("a"), py::arg("mass") = 1.0,
        "Reflection/transmission through a square barrier of half-width a");

    m.def(
        "barrier_numeric",
        [](double E, double V, double a, double mass) {
            return tmatrix::solve_scattering(BarrierPotential{V, a}, E, units_for(mass))
                .result();
        },
        py::arg("E"), py::arg("V"), py::arg("a"), py::arg("mass") = 1.0,
        "Same coefficients from the transfer-matrix solver (independent route)");

    m.def(
        "averaged",
        [](double E, double V, double mass) {
            return analytic::averaged_coefficients(E, V, units_for(mass));
        },
        py::arg("E"), py::arg("V"), py::arg("mass") = 1.0,
        "Phase-averaged coefficients in the wide-barrier limit");

    m.def(
        "resonances",
        [](double V, double a, double mass) {
            return analytic::resonance_energies(BarrierPotential{V, a}, units_for(mass));
        },
        py::arg("V"), py::arg("a"), py::arg("mass") = 1.0,
        "Transmission resonances of the barrier inside the Klein zone");

    m.def(
        "bound_states",
        [](double V, double a, double mass, double tol) {
            return spectrum::find_bound_states(V, a, units_for(mass), tol);
        },
        py::arg("V"), py::arg("a"), py::arg("mass") = 1.0, py::arg("tol") = 1e-12,
        "Bound states of the square well of depth V, sorted by energy");

    m.def(
        "delta_well",
        [](double lam, double mass) {
            return spectrum::delta_well_states(lam, units_for(mass));
        },
        py::arg("lam"), py::arg("mass") = 1.0,
        "Levels of the delta well of strength lam");

    m.def(
        "critical_potential",
        [](int N, double a, double mass) {
            return supercritical::critical_potential(N, a, units_for(mass));
        },
        py::arg("N"), py::arg("a"), py::arg("mass") = 1.0,
        "Depth at which the N-th level reaches the lower continuum");

    m.def(
        "count_supercritical",
        [](double V, double a, double mass) {
            return supercritical::count_supercritical(V, a, units_for(mass));
        },
        py::arg("V"), py::arg("a"), py::arg("mass") = 1.0,
        "Number of levels that have crossed into the lower continuum by depth V");

    m.def(
        "count_positrons",
        [](double V, double a, double mass) {
            const auto b = supercritical::count_positrons(V, a, units_for(mass));
            return py::make_tuple(b.lower, b.upper);
        },
        py::arg("V"), py::arg("a"), py::arg("mass") = 1.0,
        "Bracket (lower, upper) on the number of levels below E = 0");

    m.def(
        "emission",
        [](double delta, double a, double mass, double regime_guard) {
            return supercritical::emission_spectrum(delta, a, units_for(mass),
                                                    regime_guard);
        },
        py::arg("delta"), py::arg("a"), py::arg("mass") = 1.0,
        py::arg("regime_guard") = 0.2,
        "Positron burst of a well held just past criticality, V = 2m + delta");

    m.def(
        "rho_nonrelativistic",
        [](double Z, double E, double p, double alpha) {
            coulomb::CoulombInput in{Z, alpha, E, p};
            return coulomb::rho_nonrelativistic(in);
        },
        py::arg("Z"), py::arg("E"), py::arg("p"),
        py::arg("alpha") = coulomb::fine_structure_default,
        "Gamow factor exp(-2 pi Z alpha E / p)");

    m.def(
        "rho_relativistic",
        [](double Z, double alpha, double f) {
            coulomb::CoulombInput in{Z, alpha};
            in.gamma_ratio = f;
            return coulomb::rho_relativistic(in);
        },
        py::arg("Z"), py::arg("alpha") = coulomb::fine_structure_default,
        py::arg("f") = 1.0, "Saturated suppression f * exp(-2 pi Z alpha)");

    m.def("classical_turning_point", &coulomb::classical_turning_point, py::arg("Z"),
          py::arg("alpha"), py::arg("E"),
          "Turning radius Z alpha / E of the emitted positron");

    m.def(
        "vacuum_current_step",
        [](double V, double mass, const std::string& scheme) {
            return vacuum::vacuum_current_step(V, units_for(mass), scheme_from(scheme));
        },
        py::arg("V"), py::arg("mass") = 1.0, py::arg("scheme") = "adaptive",
        "Net vacuum current carried by the Klein zone of a step");

    m.def(
        "vacuum_current_barrier",
        [](double V, double mass, const std::string& scheme) {
            return vacuum::vacuum_current_barrier(V, units_for(mass),
                                                  scheme_from(scheme));
        },
        py::arg("V"), py::arg("mass") = 1.0, py::arg("scheme") = "adaptive",
        "Same with the phase-averaged wide-barrier transmission");

    m.attr("fine_structure_default") = coulomb::fine_structure_default;
    m.attr("__version__") = "0.1.0";
}
