from __future__ import annotations

import math

import pytest

from src.core.params import DetectorParams, DetectorState, Plate, SwitchingWindow
from src.force.components import FINITE_TIME, LONG_TIME
from src.force.plate import force_plate
from src.numerics.quadrature import ToleranceSpec

TOL = ToleranceSpec(rel_tol=1e-9, abs_tol=1e-15)
LOOSE = ToleranceSpec(rel_tol=1e-7, abs_tol=1e-15)

GROUND = DetectorState(excited_pop=0.0)
EXCITED = DetectorState(excited_pop=1.0)
EQUAL_REFLECTION = complex(1.0, 1.0) / math.sqrt(2.0)


def _params(omega: float = 1.0, sigma: float = 1.0) -> DetectorParams:
    return DetectorParams(gap_omega=omega, smearing_sigma=sigma)


def _plate(d: float = 1.0, R: complex = EQUAL_REFLECTION) -> Plate:
    return Plate(distance=d, reflection=R)


def test_friction_and_energy_components_are_locked() -> None:
    v = 0.6

    force = force_plate(_params(), GROUND, v, _plate(), SwitchingWindow(1.0), FINITE_TIME, tol=TOL)

    assert force.converged
    assert force.x == pytest.approx(-v * force.t, rel=1e-9)


def test_long_time_ground_state_splits_into_parts() -> None:
    force = force_plate(_params(), GROUND, 0.5, _plate(), SwitchingWindow(0.0), LONG_TIME, tol=TOL)

    assert set(force.parts) == {"pv", "delta"}
    assert force.parts["delta"].F == (0.0, 0.0, 0.0, 0.0)
    assert force.F == pytest.approx(force.parts["pv"].F, rel=1e-14)


def test_long_time_excited_parts_sum_to_total() -> None:
    force = force_plate(_params(), EXCITED, 0.5, _plate(2.0), SwitchingWindow(0.0), LONG_TIME, tol=TOL)

    pv, delta = force.parts["pv"], force.parts["delta"]
    assert delta.x != 0.0
    assert force.x == pytest.approx(pv.x + delta.x, rel=1e-12)
    assert force.z == pytest.approx(pv.z + delta.z, rel=1e-12)


def test_long_time_casimir_is_velocity_independent() -> None:
    slow = force_plate(_params(), GROUND, 0.1, _plate(), SwitchingWindow(0.0), LONG_TIME, tol=TOL)
    fast = force_plate(_params(), GROUND, 0.9, _plate(), SwitchingWindow(0.0), LONG_TIME, tol=TOL)

    assert fast.z == pytest.approx(slow.z, rel=1e-7)


def test_closed_and_quadrature_angular_modes_agree() -> None:
    window = SwitchingWindow(1.0)

    closed = force_plate(_params(), GROUND, 0.3, _plate(), window, FINITE_TIME, tol=LOOSE)
    numeric = force_plate(_params(), GROUND, 0.3, _plate(), window, FINITE_TIME, tol=LOOSE, angular="quadrature")

    assert numeric.x == pytest.approx(closed.x, rel=1e-5)
    assert numeric.z == pytest.approx(closed.z, rel=1e-5)


def test_transverse_component_vanishes_when_integrated() -> None:
    window = SwitchingWindow(1.0)

    force = force_plate(_params(), GROUND, 0.5, _plate(), window, FINITE_TIME, tol=LOOSE, angular="quadrature")

    assert force.converged
    assert abs(force.y) <= 1e-8 * (abs(force.x) + abs(force.z))


def test_transverse_component_comes_from_the_azimuthal_integral(monkeypatch) -> None:
    monkeypatch.setattr("src.force.plate.azimuthal_integral", lambda component, v, dt, phase: float(phase == "re"))
    window = SwitchingWindow(1.0)

    force = force_plate(_params(), GROUND, 0.3, _plate(), window, FINITE_TIME, tol=LOOSE, angular="quadrature")

    assert force.y != 0.0


def test_result_depends_only_on_dimensionless_groups() -> None:
    unit = force_plate(_params(), GROUND, 0.4, _plate(1.0), SwitchingWindow(1.0), FINITE_TIME, tol=TOL)

    scaled = force_plate(
        _params(omega=0.5, sigma=2.0), GROUND, 0.4, _plate(2.0), SwitchingWindow(2.0), FINITE_TIME, tol=TOL
    )

    assert scaled.x == pytest.approx(unit.x, rel=1e-12)
    assert scaled.z == pytest.approx(unit.z, rel=1e-12)


def test_mixed_state_is_linear_in_population() -> None:
    window = SwitchingWindow(1.0)
    ground = force_plate(_params(), GROUND, 0.4, _plate(), window, FINITE_TIME, tol=TOL)
    excited = force_plate(_params(), EXCITED, 0.4, _plate(), window, FINITE_TIME, tol=TOL)

    mixed = force_plate(_params(), DetectorState(excited_pop=0.25, coherence=0.1), 0.4, _plate(), window, tol=TOL)

    assert mixed.z == pytest.approx(0.75 * ground.z + 0.25 * excited.z, rel=1e-12)


def test_force_plate_rejects_bad_arguments() -> None:
    with pytest.raises(ValueError):
        force_plate(_params(), GROUND, 0.1, _plate(), SwitchingWindow(1.0), angular="spline")
    with pytest.raises(ValueError):
        force_plate(_params(), GROUND, 0.1, _plate(), SwitchingWindow(1.0), regime="eternal")
