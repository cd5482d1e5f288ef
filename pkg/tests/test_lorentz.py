from __future__ import annotations

import math

import numpy as np
import pytest

from src.core.errors import FasterThanLight, ZeroMomentum
from src.kinematics.lorentz import (
    METRIC,
    General,
    Inertial,
    boost_matrix,
    comoving_to_lab,
    generators,
    instantaneous_lorentz,
    integrate_worldline,
    lab_covector,
    tilde_momentum,
    worldline,
)


def _constant_boost(rapidity: float) -> General:
    return General(
        zeta_of_t=lambda tau: np.array([rapidity, 0.0, 0.0]),
        theta_of_t=lambda tau: np.zeros(3),
    )


def test_boost_preserves_metric() -> None:
    boost = boost_matrix(np.array([0.3, -0.2, 0.4])).entries

    np.testing.assert_allclose(boost.T @ METRIC @ boost, METRIC, atol=1e-14)


def test_boost_along_x() -> None:
    boost = boost_matrix(0.6).entries

    assert boost[0, 0] == pytest.approx(1.25)
    assert boost[0, 1] == pytest.approx(0.75)
    assert boost[2, 2] == 1.0


def test_boost_rejects_light_speed() -> None:
    with pytest.raises(FasterThanLight):
        boost_matrix(np.array([0.8, 0.6, 0.0]))


def test_generators_are_imaginary_multiples_of_real_matrices() -> None:
    gens = generators()

    assert len(gens.K) == 3 and len(gens.J) == 3
    for matrix in (*gens.K, *gens.J):
        assert np.allclose(matrix.real, 0.0)


def test_instantaneous_lorentz_matches_pure_boost() -> None:
    rapidity = math.atanh(0.6)

    exp_form = instantaneous_lorentz(np.array([rapidity, 0.0, 0.0]), np.zeros(3))

    np.testing.assert_allclose(exp_form.entries, boost_matrix(0.6).entries, atol=1e-13)


def test_instantaneous_rotation_is_orthogonal() -> None:
    rotation = instantaneous_lorentz(np.zeros(3), np.array([0.0, 0.0, math.pi / 2])).entries

    assert rotation[0, 0] == pytest.approx(1.0)
    np.testing.assert_allclose(rotation[1:, 1:] @ rotation[1:, 1:].T, np.eye(3), atol=1e-13)
    assert abs(rotation[1, 2]) == pytest.approx(1.0)


def test_tilde_momentum_head_on_mode() -> None:
    k_tilde = tilde_momentum(np.array([1.0, 0.0, 0.0]), 0.6)

    assert k_tilde.lower
    np.testing.assert_allclose(k_tilde.components, [-0.5, 0.5, 0.0, 0.0], atol=1e-15)


def test_tilde_momentum_is_null_and_matches_pullback() -> None:
    k = np.array([0.3, -1.2, 0.7])

    k_tilde = tilde_momentum(k, 0.8)
    pulled = boost_matrix(0.8).pullback(lab_covector(k).components)

    assert k_tilde.raised().minkowski_square() == pytest.approx(0.0, abs=1e-12)
    np.testing.assert_allclose(k_tilde.components, pulled, atol=1e-13)


def test_tilde_momentum_rejects_zero_mode() -> None:
    with pytest.raises(ZeroMomentum):
        tilde_momentum(np.zeros(3), 0.1)


def test_inertial_worldline_and_comoving_point() -> None:
    traj = Inertial(velocity=(0.6, 0.0, 0.0))

    centre = worldline(traj, 2.0).components
    edge = comoving_to_lab(traj, 0.0, np.array([0.0, 0.0, 1.0])).components

    np.testing.assert_allclose(centre, [2.5, 1.5, 0.0, 0.0], atol=1e-14)
    np.testing.assert_allclose(edge, [0.0, 0.0, 0.0, 1.0], atol=1e-14)


def test_integrated_worldline_matches_inertial_motion() -> None:
    rapidity = math.atanh(0.6)

    solution = integrate_worldline(_constant_boost(rapidity), 3.0)

    np.testing.assert_allclose(solution(3.0), [3.75, 2.25, 0.0, 0.0], rtol=1e-9, atol=1e-12)
    with pytest.raises(ValueError):
        solution(4.0)


def test_integrate_worldline_rejects_past() -> None:
    with pytest.raises(ValueError):
        integrate_worldline(_constant_boost(0.1), -1.0)
