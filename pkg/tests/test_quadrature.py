from __future__ import annotations

import math

import numpy as np
import pytest
from scipy import integrate, special

from src.core.errors import NonFiniteIntegrand, NonPositiveShell, PoleOutsideDomain, ToleranceNotMet
from src.numerics.quadrature import (
    QuadratureResult,
    ToleranceSpec,
    integrate_1d,
    integrate_pv,
    integrate_sphere,
    onshell_surface_integral,
)

TIGHT = ToleranceSpec(rel_tol=1e-11, abs_tol=1e-14)


def test_tolerance_spec_validation() -> None:
    with pytest.raises(ValueError):
        ToleranceSpec(rel_tol=0.0)
    with pytest.raises(ValueError):
        ToleranceSpec(abs_tol=-1.0)
    with pytest.raises(ValueError):
        ToleranceSpec(max_evals=10)


def test_integrate_finite_interval() -> None:
    result = integrate_1d(np.sin, 0.0, math.pi, TIGHT)

    assert result.converged
    assert result.value == pytest.approx(2.0, rel=1e-10)
    assert result.evaluations >= 15


def test_integrate_reversed_interval_changes_sign() -> None:
    result = integrate_1d(np.cos, math.pi / 2, 0.0, TIGHT)

    assert result.value == pytest.approx(-1.0, rel=1e-10)


def test_integrate_empty_interval() -> None:
    assert integrate_1d(np.exp, 1.0, 1.0).value == 0.0


def test_integrate_semi_infinite_gaussian() -> None:
    result = integrate_1d(lambda s: np.exp(-0.5 * s**2), 0.0, math.inf, TIGHT, breakpoints=[10.0])

    assert result.value == pytest.approx(math.sqrt(math.pi / 2.0), rel=1e-9)


def test_integrate_oscillatory_with_panels() -> None:
    delta_tau = 40.0

    result = integrate_1d(
        lambda s: np.cos(delta_tau * s) * np.exp(-0.5 * s**2),
        0.0,
        math.inf,
        TIGHT,
        breakpoints=[12.0],
        panel_width=math.pi / delta_tau,
    )

    expected = 0.5 * math.sqrt(2.0 * math.pi) * math.exp(-0.5 * delta_tau**2)
    assert result.value == pytest.approx(expected, abs=1e-10)


def test_integrate_rejects_non_finite_values() -> None:
    with pytest.raises(NonFiniteIntegrand):
        integrate_1d(lambda s: np.full_like(s, np.nan), 0.0, 1.0)
    with pytest.raises(ValueError):
        integrate_1d(np.sin, -math.inf, 0.0)


def test_principal_value_finite_interval() -> None:
    result = integrate_pv(lambda s: np.ones_like(s), 1.0, 0.0, 3.0, TIGHT)

    assert result.value == pytest.approx(math.log(2.0), rel=1e-12)


def test_principal_value_semi_infinite() -> None:
    result = integrate_pv(lambda s: np.exp(-s), 1.0, 0.0, math.inf, TIGHT, breakpoints=[40.0])

    expected = -math.exp(-1.0) * special.expi(1.0)
    assert result.value == pytest.approx(expected, rel=1e-9)


def test_principal_value_matches_cauchy_weight_quadrature() -> None:
    reference, _ = integrate.quad(np.cos, 0.0, 4.0, weight="cauchy", wvar=1.5, epsabs=1e-13, epsrel=1e-12)

    result = integrate_pv(np.cos, 1.5, 0.0, 4.0, TIGHT)

    assert result.value == pytest.approx(reference, rel=1e-9)


def test_principal_value_pole_outside() -> None:
    with pytest.raises(PoleOutsideDomain):
        integrate_pv(np.exp, 2.0, 0.0, 1.0)


def test_sphere_integrals() -> None:
    area = integrate_sphere(lambda theta, phi: np.ones_like(theta * phi), TIGHT)
    moment = integrate_sphere(lambda theta, phi: np.cos(theta) ** 2 + 0.0 * phi, TIGHT)
    odd = integrate_sphere(lambda theta, phi: np.sin(theta) * np.cos(phi), TIGHT)

    assert area.value == pytest.approx(4.0 * math.pi, rel=1e-12)
    assert moment.value == pytest.approx(4.0 * math.pi / 3.0, rel=1e-12)
    assert abs(odd.value) < 1e-13


def test_onshell_surface_at_rest_is_sphere_area() -> None:
    result = onshell_surface_integral(lambda theta, phi: np.ones_like(theta * phi), 2.0, TIGHT)

    assert result.value == pytest.approx(16.0 * math.pi, rel=1e-12)


def test_onshell_surface_moving_detector() -> None:
    # the lab direction cosine averages to 4 pi gamma v s^2 over the shell
    v = 0.6

    result = onshell_surface_integral(lambda theta, phi: np.cos(theta) + 0.0 * phi, 1.5, TIGHT, velocity=v)

    assert result.value == pytest.approx(4.0 * math.pi * 1.25 * v * 1.5**2, rel=1e-10)


def test_onshell_surface_rejects_unreachable_shell() -> None:
    with pytest.raises(NonPositiveShell):
        onshell_surface_integral(lambda theta, phi: theta, -1.0)


def test_require_raises_when_unconverged() -> None:
    result = QuadratureResult(value=1.0, error_estimate=0.5, evaluations=15, converged=False)

    with pytest.raises(ToleranceNotMet):
        result.require("test")
    assert (result + result).value == 2.0
    assert result.scaled(-2.0).error_estimate == 1.0
