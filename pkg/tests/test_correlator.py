from __future__ import annotations

import math

import numpy as np
import pytest

from src.core.errors import PointBeyondPlate, ZeroMomentum
from src.field.correlator import (
    ModeLabel,
    free_wightman_k,
    image_wightman_k,
    lippmann_schwinger_k,
    mirror,
    plane_wave_mode,
    plate_factor,
    plate_kernel,
    tmatrix_plate,
)
from src.kinematics.lorentz import FourVector


def _event(t: float, x: float, y: float, z: float) -> FourVector:
    return FourVector(np.array([t, x, y, z]))


def test_mode_label_rejects_zero_momentum() -> None:
    with pytest.raises(ZeroMomentum):
        ModeLabel((0.0, 0.0, 0.0))


def test_reflected_mode_flips_kz() -> None:
    assert ModeLabel((1.0, 2.0, 3.0)).reflected() == ModeLabel((1.0, 2.0, -3.0))


def test_free_kernel_is_product_of_modes() -> None:
    k = ModeLabel((0.4, -0.3, 1.1))
    x1 = _event(0.7, 0.1, -0.2, 0.3)
    x2 = _event(-0.4, 0.5, 0.0, -0.6)

    expected = np.conj(plane_wave_mode(k, x1)) * plane_wave_mode(k, x2)

    assert free_wightman_k(k, x1, x2) == pytest.approx(expected, rel=1e-13)


def test_free_kernel_accepts_lower_index_points() -> None:
    k = ModeLabel((0.2, 0.0, 0.9))
    x1 = _event(1.0, 0.2, 0.0, 0.1)
    x2 = _event(0.0, 0.0, 0.3, 0.0)

    assert free_wightman_k(k, x1.lowered(), x2) == pytest.approx(free_wightman_k(k, x1, x2), rel=1e-14)


def test_plate_kernel_vanishes_for_dirichlet_resonance() -> None:
    d = 0.75
    k = ModeLabel((0.0, 0.0, math.pi / d))

    assert abs(plate_kernel(k, d, 1.0).value) < 1e-14
    assert plate_factor(0.0, d, -1.0) == 2.0


def test_plate_kernel_rejects_non_positive_distance() -> None:
    with pytest.raises(ValueError):
        plate_kernel(ModeLabel((1.0, 0.0, 0.0)), 0.0, 1.0)


def test_tmatrix_is_diagonal() -> None:
    k = ModeLabel((1.0, 0.0, 0.5))

    diagonal = tmatrix_plate(k, k, 0.5j)
    off = tmatrix_plate(k, ModeLabel((1.0, 0.0, -0.5)), 0.5j)

    assert diagonal.diagonal
    assert diagonal.coefficient == pytest.approx(-(2.0 * math.pi) ** 3 * 0.5j)
    assert not off.diagonal
    assert off.coefficient == 0j


def test_lippmann_schwinger_factorizes() -> None:
    k = ModeLabel((0.3, 0.8, -0.6))
    r0 = _event(0.5, 0.0, 0.0, 0.0)
    r1 = _event(0.0, 0.2, -0.1, 0.0)
    R = complex(0.6, -0.3)

    expected = free_wightman_k(k, r0, r1) * plate_kernel(k, 1.3, R).value

    assert lippmann_schwinger_k(k, r0, r1, 1.3, R) == pytest.approx(expected, rel=1e-12)


def test_lippmann_schwinger_is_independent_of_surface_point() -> None:
    k = ModeLabel((0.3, 0.8, -0.6))
    r0 = _event(0.5, 0.0, 0.0, 0.0)
    r1 = _event(0.0, 0.2, -0.1, 0.0)
    R = complex(0.6, -0.3)

    shifted = lippmann_schwinger_k(k, r0, r1, 1.3, R, surface=_event(2.1, -0.7, 3.0, 1.3))

    assert shifted == pytest.approx(lippmann_schwinger_k(k, r0, r1, 1.3, R), rel=1e-12)
    with pytest.raises(ValueError):
        lippmann_schwinger_k(k, r0, r1, 1.3, R, surface=_event(0.0, 0.0, 0.0, 1.0))


def test_lippmann_schwinger_matches_image_form_off_detector_plane() -> None:
    k = ModeLabel((0.3, 0.8, -0.6))
    r0 = _event(0.5, 0.1, 0.0, 0.4)
    r1 = _event(0.0, 0.2, -0.1, 0.4)
    R = complex(0.6, -0.3)

    expected = image_wightman_k(k.reflected(), r0, r1, 1.3, R)

    assert lippmann_schwinger_k(k, r0, r1, 1.3, R) == pytest.approx(expected, rel=1e-12)


def test_image_form_uses_reflected_label() -> None:
    k = ModeLabel((0.3, 0.8, -0.6))
    r0 = _event(0.5, 0.1, 0.0, -0.2)
    r1 = _event(0.0, 0.2, -0.1, 0.4)
    d = 1.3
    R = complex(0.6, -0.3)

    expected = free_wightman_k(k, r0, r1) * plate_kernel(k.reflected(), d - 0.4, R).value

    assert image_wightman_k(k, r0, r1, d, R) == pytest.approx(expected, rel=1e-12)


def test_image_form_rejects_points_beyond_plate() -> None:
    k = ModeLabel((0.0, 0.0, 1.0))

    with pytest.raises(PointBeyondPlate):
        image_wightman_k(k, _event(0.0, 0.0, 0.0, 2.0), _event(0.0, 0.0, 0.0, 0.0), 1.0, 1.0)


def test_mirror_is_an_involution() -> None:
    x = _event(0.2, 0.1, -0.4, 0.3)

    image = mirror(x, 1.0)

    assert image.components[3] == pytest.approx(1.7)
    np.testing.assert_allclose(mirror(image, 1.0).components, x.components, atol=1e-15)
