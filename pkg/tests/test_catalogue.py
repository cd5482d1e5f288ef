from __future__ import annotations

import math

import pytest

from src.asymptotics.catalogue import (
    RegimeKey,
    all_keys,
    asymptote,
    asymptote_terms,
    ground_casimir_bracket,
    ground_friction_bracket,
    keys_for,
    pointlike_near_plate,
)
from src.core.errors import UnknownRegime
from src.core.params import (
    NATURAL_SCALES,
    SI_SCALES,
    SPEED_OF_LIGHT_SI,
    DetectorParams,
    DetectorState,
    SwitchingWindow,
    force_unit,
)
from src.force.components import LONG_TIME
from src.force.free import force_free
from src.numerics.quadrature import ToleranceSpec

TOL = ToleranceSpec(rel_tol=1e-9, abs_tol=1e-15)
PARAMS = DetectorParams(gap_omega=1.0, smearing_sigma=1.0)


def _key(state: str, component: str, time: str, distance: str, **rest) -> RegimeKey:
    return RegimeKey(state, component, time, distance, **rest)


def test_catalogue_size_and_partition() -> None:
    keys = all_keys()

    assert len(keys) == 27
    assert all(key.distance == "free" for key in keys_for(False))
    assert all(key.distance != "free" and key.time == "short" for key in keys_for(True, "short"))
    assert len(keys_for(False)) + len(keys_for(True)) == len(keys)


def test_regime_key_validation() -> None:
    with pytest.raises(UnknownRegime):
        _key("ground", "friction_x", "long", "tiny_d")
    with pytest.raises(UnknownRegime):
        _key("ground", "friction_x", "long", "large_d", velocity="high_v")
    with pytest.raises(KeyError):
        _key("excited", "friction_x", "long", "small_d")

    assert _key("ground", "casimir_z", "long", "large_d", velocity="high_v").label == (
        "ground/casimir_z/long/large_d/high_v/total"
    )


def test_missing_inputs_rejected() -> None:
    with pytest.raises(ValueError):
        asymptote(_key("ground", "friction_x", "long", "small_d"), PARAMS, 0.5)
    with pytest.raises(ValueError):
        asymptote(_key("ground", "friction_x", "short", "small_d"), PARAMS, 0.5, d=0.05)
    with pytest.raises(ValueError):
        asymptote(_key("ground", "friction_x", "short", "free"), PARAMS, 0.5)


def test_brackets_at_small_gap() -> None:
    assert ground_friction_bracket(1e-4) == pytest.approx(1.0, rel=1e-3)
    assert ground_casimir_bracket(1e-4) == pytest.approx(math.sqrt(math.pi) / 2.0, rel=1e-3)


def test_free_short_time_limit_matches_numeric() -> None:
    window = SwitchingWindow(1e-3)

    numeric = force_free(PARAMS, DetectorState(excited_pop=0.0), 0.5, window, tol=TOL)

    limit = asymptote(_key("ground", "friction_x", "short", "free"), PARAMS, 0.5, window=window)
    assert numeric.x == pytest.approx(limit, rel=1e-3)


def test_free_excited_steady_value_matches_on_shell_force() -> None:
    window = SwitchingWindow(0.0)
    key = _key("excited", "friction_x", "long", "free", contribution="delta")

    numeric = force_free(PARAMS, DetectorState(excited_pop=1.0), 0.5, window, LONG_TIME, tol=TOL)

    assert asymptote(key, PARAMS, 0.5, window=window, warn=False) == pytest.approx(numeric.x, rel=1e-8)


def test_short_time_terms_are_split() -> None:
    key = _key("ground", "casimir_z", "short", "small_d")
    window = SwitchingWindow(1e-3)

    terms = asymptote_terms(key, PARAMS, 0.5, d=0.05, R=1j, window=window)

    assert set(terms) == {"linear", "quadratic"}
    assert terms["quadratic"] == 0.0
    assert asymptote(key, PARAMS, 0.5, d=0.05, R=1j, window=window) == terms["linear"]


def test_si_value_scales_with_force_unit() -> None:
    sigma = 0.01
    si_params = DetectorParams(gap_omega=2.0 * SPEED_OF_LIGHT_SI / sigma, smearing_sigma=sigma, coupling_lambda=3.0)
    natural_params = DetectorParams(gap_omega=2.0, smearing_sigma=1.0)
    key = _key("ground", "casimir_z", "long", "small_d")

    si = asymptote(key, si_params, 0.3 * SPEED_OF_LIGHT_SI, d=0.05 * sigma, R=0.8, scales=SI_SCALES)
    natural = asymptote(key, natural_params, 0.3, d=0.05, R=0.8, scales=NATURAL_SCALES)

    assert si / force_unit(si_params, SI_SCALES) == pytest.approx(natural, rel=1e-10)


def test_pointlike_limit_near_plate() -> None:
    pointlike = DetectorParams(gap_omega=1.0, smearing_sigma=0.0)
    key = _key("ground", "casimir_z", "long", "pointlike", velocity="small_v")

    value = asymptote(key, pointlike, 0.0, d=1e-4)

    near = pointlike_near_plate(pointlike, 1e-4, 1.0)
    assert near == pytest.approx(-1.0 / (16.0 * math.pi * 1e-8))
    assert value == pytest.approx(near, rel=1e-3)


def test_outside_regime_warns(capsys) -> None:
    key = _key("ground", "friction_x", "long", "large_d")

    asymptote(key, PARAMS, 0.5, d=1.0)
    warned = capsys.readouterr().err
    asymptote(key, PARAMS, 0.5, d=1.0, warn=False)
    quiet = capsys.readouterr().err

    assert "asymptote_outside_regime" in warned
    assert quiet == ""
