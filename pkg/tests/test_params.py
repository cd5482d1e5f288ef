from __future__ import annotations

import math

import pytest

from src.core import events
from src.core.errors import (
    FasterThanLight,
    InvalidSmearing,
    NotDensityMatrix,
    UDWFError,
    UnknownRegime,
)
from src.core.params import (
    NATURAL_SCALES,
    SI_SCALES,
    SPEED_OF_LIGHT_SI,
    DetectorParams,
    DetectorState,
    FreeSpace,
    PhysicalScales,
    Plate,
    SwitchingWindow,
    force_unit,
    from_dimensionless,
    lorentz_factor,
    natural_inputs,
    to_dimensionless,
    validate_state,
)


@pytest.fixture(autouse=True)
def _reset_event_level():
    yield
    events.set_level("INFO")


def test_lorentz_factor() -> None:
    assert lorentz_factor(0.0) == 1.0
    assert lorentz_factor(0.6) == pytest.approx(1.25)
    assert lorentz_factor(-0.6) == pytest.approx(1.25)


def test_lorentz_factor_rejects_light_speed() -> None:
    with pytest.raises(FasterThanLight):
        lorentz_factor(1.0)
    with pytest.raises(ValueError):
        lorentz_factor(math.nan)


def test_detector_params_validation() -> None:
    with pytest.raises(InvalidSmearing):
        DetectorParams(gap_omega=1.0, smearing_sigma=-1.0)
    with pytest.raises(ValueError):
        DetectorParams(gap_omega=-1.0, smearing_sigma=1.0)
    with pytest.raises(ValueError):
        DetectorParams(gap_omega=1.0, smearing_sigma=1.0, coupling_lambda=0.0)
    with pytest.raises(ValueError):
        DetectorParams(gap_omega=1.0, smearing_sigma=1.0, regulator_gamma=-0.1)

    pointlike = DetectorParams(gap_omega=1.0, smearing_sigma=0.0)
    assert pointlike.smearing_sigma == 0.0


def test_plate_and_window_validation() -> None:
    with pytest.raises(ValueError):
        Plate(distance=0.0, reflection=1.0)
    with pytest.raises(ValueError):
        Plate(distance=1.0, reflection=1.5)
    with pytest.raises(ValueError):
        SwitchingWindow(-1.0)

    assert Plate(distance=1.0, reflection=complex(0.6, 0.8)).reflection == complex(0.6, 0.8)


def test_physical_scales_validation() -> None:
    with pytest.raises(ValueError):
        PhysicalScales(c=2.0, hbar=1.0, unit_mode="natural")
    with pytest.raises(ValueError):
        PhysicalScales(c=1.0, hbar=1.0, unit_mode="gaussian")

    assert SI_SCALES.c == SPEED_OF_LIGHT_SI


def test_validate_state() -> None:
    state = DetectorState(excited_pop=0.5, coherence=0.5j)
    assert validate_state(state) is state

    with pytest.raises(NotDensityMatrix):
        validate_state(DetectorState(excited_pop=1.2))
    with pytest.raises(NotDensityMatrix):
        validate_state(DetectorState(excited_pop=0.1, coherence=0.5))
    with pytest.raises(NotDensityMatrix):
        validate_state(DetectorState(excited_pop=1.0, coherence=0.01))


def test_to_dimensionless() -> None:
    params = DetectorParams(gap_omega=2.0, smearing_sigma=0.5)

    groups = to_dimensionless(params, Plate(distance=1.0, reflection=1.0), 0.6, SwitchingWindow(3.0))

    assert groups.x_gap == pytest.approx(1.0)
    assert groups.y == pytest.approx(1.0 / math.sqrt(2.0))
    assert groups.t_gap == pytest.approx(6.0)
    assert groups.d_ratio == pytest.approx(2.0)
    assert groups.beta_v == 0.6
    assert groups.gamma_lorentz == pytest.approx(1.25)


def test_to_dimensionless_free_space_has_no_distance() -> None:
    params = DetectorParams(gap_omega=1.0, smearing_sigma=1.0)

    groups = to_dimensionless(params, FreeSpace(), 0.0, SwitchingWindow(0.0))

    assert groups.d_ratio is None
    assert groups.gamma_lorentz == 1.0


def test_to_dimensionless_requires_finite_size() -> None:
    with pytest.raises(InvalidSmearing):
        to_dimensionless(DetectorParams(1.0, 0.0), FreeSpace(), 0.1, SwitchingWindow(1.0))


def test_from_dimensionless_rebuilds_configuration() -> None:
    params = DetectorParams(gap_omega=2.0, smearing_sigma=0.5)
    groups = to_dimensionless(params, Plate(distance=1.0, reflection=1.0), 0.6, SwitchingWindow(3.0))

    rebuilt, boundary, v, window = from_dimensionless(groups, sigma=0.5)

    assert rebuilt.gap_omega == pytest.approx(2.0)
    assert boundary.distance == pytest.approx(1.0)
    assert v == 0.6
    assert window.delta_tau == pytest.approx(3.0)


def test_natural_inputs_si() -> None:
    sigma = 0.01
    params = DetectorParams(gap_omega=SPEED_OF_LIGHT_SI / sigma, smearing_sigma=sigma, regulator_gamma=0.0)
    plate = Plate(distance=0.02, reflection=-1.0)

    natural, boundary, beta, window = natural_inputs(
        params, plate, 0.5 * SPEED_OF_LIGHT_SI, SwitchingWindow(3.0 * sigma / SPEED_OF_LIGHT_SI), SI_SCALES
    )

    assert natural.gap_omega == pytest.approx(1.0)
    assert natural.smearing_sigma == 1.0
    assert boundary.distance == pytest.approx(2.0)
    assert boundary.reflection == -1.0
    assert beta == pytest.approx(0.5)
    assert window.delta_tau == pytest.approx(3.0)


def test_force_unit() -> None:
    params = DetectorParams(gap_omega=1.0, smearing_sigma=0.5, coupling_lambda=2.0)

    assert force_unit(params, NATURAL_SCALES) == pytest.approx(16.0)


def test_error_hierarchy() -> None:
    assert issubclass(FasterThanLight, UDWFError)
    assert issubclass(FasterThanLight, ValueError)
    assert issubclass(UnknownRegime, KeyError)


def test_emit_respects_level(capsys) -> None:
    events.set_level("WARNING")
    events.emit("quiet_event", {"n": 1})
    events.emit("loud_event", {"n": 2}, level="ERROR")

    err = capsys.readouterr().err
    assert "quiet_event" not in err
    assert "loud_event {'n': 2}" in err


def test_set_level_rejects_unknown() -> None:
    with pytest.raises(ValueError):
        events.set_level("TRACE")
