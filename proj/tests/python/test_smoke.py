"""Smoke checks for the python bindings: a few frozen values and the
exception mapping. Run directly (ctest) or via pytest."""

import math

import kleinlab


def approx(x, y, tol=1e-12):
    assert abs(x - y) <= tol * max(1.0, abs(x), abs(y)), (x, y)


def test_step_reference():
    r = kleinlab.step(2.0, 4.0)
    approx(r.kappa, 3.0)
    approx(r.R, 0.25)
    approx(r.T, 0.75)
    assert r.regime == kleinlab.Regime.propagating_klein


def test_barrier_routes_agree():
    a = kleinlab.barrier(2.0, 4.0, 1.3)
    n = kleinlab.barrier_numeric(2.0, 4.0, 1.3)
    approx(a.T, n.T, 1e-11)
    approx(a.R + a.T, 1.0)


def test_resonances():
    es = [r.energy for r in kleinlab.resonances(4.0, math.pi / 2)]
    approx(es[0], 4.0 - math.sqrt(2.0))
    approx(es[1], 4.0 - math.sqrt(5.0))
    for e in es:
        approx(kleinlab.barrier(e, 4.0, math.pi / 2).T, 1.0, 1e-12)


def test_averaged():
    approx(kleinlab.averaged(2.0, 4.0).T_infinity, 9.0 / 17.0)


def test_bound_states_and_counting():
    states = kleinlab.bound_states(1.5, 2.0)
    assert len(states) == 3
    assert states[0].parity == kleinlab.Parity.even
    assert kleinlab.count_supercritical(3.0, 5.0) == 5
    assert kleinlab.count_positrons(3.0, 5.0) == (9, 10)
    approx(kleinlab.critical_potential(1, 2.0), 1.0 + math.sqrt(1.0 + math.pi**2 / 16.0))


def test_delta_well():
    approx(kleinlab.delta_well(math.pi / 3).active_energy, 0.5)


def test_emission():
    spec = kleinlab.emission(0.1, 100.0)
    assert spec.exact_count == 29
    assert len(spec.lines) == 29
    approx(spec.estimated_count, 40.0 / math.pi)
    approx(spec.sweep_time, 1000.0)
    assert not spec.warnings


def test_coulomb():
    rho = kleinlab.rho_relativistic(1.0 / kleinlab.fine_structure_default)
    approx(rho, math.exp(-2.0 * math.pi), 1e-13)
    approx(kleinlab.rho_nonrelativistic(92.0, 2.0, 1.0), 0.00021680465895520574, 1e-13)
    approx(kleinlab.classical_turning_point(92.0, kleinlab.fine_structure_default, 2.0),
           0.33567821839281808, 1e-13)


def test_vacuum_current():
    ja = kleinlab.vacuum_current_step(4.0)
    jc = kleinlab.vacuum_current_step(4.0, scheme="composite")
    approx(ja, -1.2939837972375578, 1e-9)
    approx(ja, jc, 1e-9)
    assert abs(kleinlab.vacuum_current_barrier(4.0)) < abs(ja)


def test_domain_errors_are_value_errors():
    try:
        kleinlab.step(0.5, 4.0)
    except ValueError:
        pass
    else:
        raise AssertionError("sub-gap energy must raise")
    try:
        kleinlab.barrier(2.0, 4.0, -1.0)
    except ValueError:
        pass
    else:
        raise AssertionError("negative half-width must raise")


if __name__ == "__main__":
    tests = sorted(k for k in dir() if k.startswith("test_"))
    for name in tests:
        globals()[name]()
        print(f"{name}: ok")
    print(f"{len(tests)} python smoke tests passed")
