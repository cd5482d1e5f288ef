"""Trajectory kernel Upsilon(Omega, tau) of the first-order force.

    Upsilon = f(k.Lambda_j(tau))* exp(-i Omega tau + i k.x(tau))
              * int_{tau0}^{tau} dtau' exp(i Omega tau' - i k.x(tau')) f(k.Lambda_j(tau'))

with f the Fourier transform of the smearing profile, exp(-sigma^2 k~^2 / 4) for
the Gaussian. Natural units (c = 1); sigma is taken from the params as given.
"""

from __future__ import annotations

import math

import numpy as np

from src.core.params import DetectorParams, SwitchingWindow, require_finite_size
from src.field.correlator import ModeLabel
from src.force.kernels import beta_factor, gaussian_smearing_ft
from src.kinematics.lorentz import (
    General,
    Inertial,
    TrajectorySpec,
    integrate_worldline,
    lab_covector,
    lorentz_at,
    tilde_momentum,
)
from src.numerics.quadrature import ToleranceSpec, integrate_1d

UPSILON_TOLERANCE = ToleranceSpec(rel_tol=1e-11, abs_tol=1e-300)


def _profile_ft(k_tilde: np.ndarray, sigma: float) -> np.ndarray | float:
    # |f|^2 = exp(-sigma^2 k~^2 / 2), so f itself has width sigma / sqrt(2)
    return gaussian_smearing_ft(k_tilde, sigma / math.sqrt(2.0))


def upsilon_inertial(
    params: DetectorParams,
    v: float,
    k: ModeLabel,
    window: SwitchingWindow,
    omega: float | None = None,
) -> complex:
    """|f(k~)|^2 beta for a detector moving with constant velocity v along x.

    The smearing weight is |f(k~)|^2 = exp(-sigma^2 |k~|^2 / 2), the same as
    smearing_weight(|k~|, sigma) and gaussian_smearing_ft(k~, sigma / sqrt(2))^2.
    It is not gaussian_smearing_ft(k~, sigma)^2 = exp(-sigma^2 |k~|^2).
    `omega` overrides the gap, e.g. with -Omega for the excited channel.
    """
    require_finite_size(params)
    gap = params.gap_omega if omega is None else omega
    k_tilde = tilde_momentum(k.vector, v).components
    weight = _profile_ft(k_tilde[1:], params.smearing_sigma) ** 2
    return complex(weight * beta_factor(gap, k_tilde[0], window.delta_tau))


def upsilon_general(
    traj: TrajectorySpec,
    params: DetectorParams,
    k: ModeLabel,
    tau: float,
    tau0: float | None = None,
    omega: float | None = None,
    tol: ToleranceSpec | None = None,
) -> complex:
    """Upsilon by quadrature of the proper-time history of the trajectory.

    The smearing factor inside the integral is evaluated with Lambda(tau'); for
    General trajectories tau0 defaults to the trajectory's own start.
    """
    require_finite_size(params)
    if tau0 is None:
        if not isinstance(traj, General):
            raise ValueError("tau0 is required for an inertial trajectory")
        tau0 = traj.tau0
    if tau < tau0:
        raise ValueError(f"tau must be >= tau0 = {tau0}, got {tau}")
    if tau == tau0:
        return 0j
    gap = params.gap_omega if omega is None else omega
    sigma = params.smearing_sigma
    k_lower = lab_covector(k.vector).components

    if isinstance(traj, Inertial):
        column = lorentz_at(traj, tau).entries[0, :]

        def position(t: np.ndarray) -> np.ndarray:
            return np.multiply.outer(np.asarray(t) - tau0, column)

    else:
        solution = integrate_worldline(General(traj.zeta_of_t, traj.theta_of_t, tau0), tau)
        position = solution

    def smearing(t: float) -> float:
        k_tilde = lorentz_at(traj, t).pullback(k_lower)
        return float(_profile_ft(k_tilde[1:], sigma))

    phase_now = float(k_lower @ position(np.array([tau]))[0])

    def integrand(t: np.ndarray) -> np.ndarray:
        phases = position(t) @ k_lower
        profile = np.array([smearing(float(ti)) for ti in np.ravel(t)])
        return np.exp(-1j * gap * (tau - t) + 1j * (phase_now - phases)) * profile

    history = integrate_1d(
        integrand,
        tau0,
        tau,
        tol or UPSILON_TOLERANCE,
        panel_width=math.pi / max(abs(gap) + float(np.linalg.norm(k.vector)), 1.0 / (tau - tau0)),
        context="upsilon_general",
    )
    return complex(smearing(tau) * history.value)
