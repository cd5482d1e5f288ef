"""Lorentz generators, boosts, momentum pullback and detector worldlines.

Units are natural (c = 1); velocities are fractions of c. A LorentzMatrix stores
Lambda_nu^mu as ``entries[nu, mu]`` with nu the comoving index and mu the lab
index, so lab coordinates are ``entries.T @ xi`` and a lower-index lab covector
pulls back as ``entries @ k``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from scipy.integrate import solve_ivp
from scipy.linalg import expm

from src.core.errors import FasterThanLight, IntegrationFailure, ZeroMomentum

METRIC = np.diag([-1.0, 1.0, 1.0, 1.0])

WORLDLINE_RTOL = 1e-12
WORLDLINE_ATOL = 1e-14


@dataclass(frozen=True)
class GeneratorSet:
    """Boost generators K[j] and rotation generators J[j] with Lambda = exp(i(K.zeta + J.theta))."""

    K: tuple[np.ndarray, np.ndarray, np.ndarray]
    J: tuple[np.ndarray, np.ndarray, np.ndarray]


@dataclass(frozen=True)
class LorentzMatrix:
    """A proper orthochronous Lorentz transformation Lambda_nu^mu."""

    entries: np.ndarray

    def __matmul__(self, other: LorentzMatrix) -> LorentzMatrix:
        return LorentzMatrix(self.entries @ other.entries)

    def apply(self, comoving: np.ndarray) -> np.ndarray:
        """Map comoving contravariant components to lab components."""
        return self.entries.T @ np.asarray(comoving, dtype=float)

    def pullback(self, k_lower: np.ndarray) -> np.ndarray:
        """Contract a lab covector k_mu with Lambda_nu^mu."""
        return self.entries @ np.asarray(k_lower, dtype=float)


@dataclass(frozen=True)
class FourVector:
    """Components (x0, x1, x2, x3) with the stated index position."""

    components: np.ndarray
    lower: bool = False

    def minkowski_square(self) -> float:
        x = np.asarray(self.components, dtype=float)
        return float(x @ METRIC @ x)

    def lowered(self) -> FourVector:
        if self.lower:
            return self
        return FourVector(METRIC @ np.asarray(self.components, dtype=float), lower=True)

    def raised(self) -> FourVector:
        if not self.lower:
            return self
        return FourVector(METRIC @ np.asarray(self.components, dtype=float), lower=False)


@dataclass(frozen=True)
class Inertial:
    """Constant velocity, as a 3-vector fraction of c."""

    velocity: tuple[float, float, float]


@dataclass(frozen=True)
class General:
    """Rapidity and rotation histories zeta(tau), theta(tau) starting at tau0."""

    zeta_of_t: Callable[[float], np.ndarray]
    theta_of_t: Callable[[float], np.ndarray]
    tau0: float = 0.0


TrajectorySpec = Inertial | General


def _cross_matrix(axis: np.ndarray) -> np.ndarray:
    x, y, z = axis
    return np.array([[0.0, -z, y], [z, 0.0, -x], [-y, x, 0.0]])


def _real_generators() -> tuple[list[np.ndarray], list[np.ndarray]]:
    boosts = []
    rotations = []
    for j, axis in enumerate(np.eye(3), start=1):
        k = np.zeros((4, 4))
        k[0, j] = k[j, 0] = 1.0
        boosts.append(k)
        # spatial block epsilon_{j a b}; its transpose rotates lab vectors positively about axis j
        r = np.zeros((4, 4))
        r[1:, 1:] = -_cross_matrix(axis)
        rotations.append(r)
    return boosts, rotations


_K_REAL, _J_REAL = _real_generators()


def generators() -> GeneratorSet:
    """Return the generator set in the exp(i(...)) convention."""
    return GeneratorSet(
        K=tuple(-1j * k for k in _K_REAL),
        J=tuple(-1j * r for r in _J_REAL),
    )


def _as_velocity(v: float | np.ndarray) -> np.ndarray:
    if np.isscalar(v):
        vec = np.array([float(v), 0.0, 0.0])
    else:
        vec = np.asarray(v, dtype=float).reshape(3)
    if not np.all(np.isfinite(vec)):
        raise ValueError("velocity must be finite")
    if float(vec @ vec) >= 1.0:
        raise FasterThanLight(f"|v|/c must be < 1, got {float(np.sqrt(vec @ vec))}")
    return vec


def boost_matrix(v: float | np.ndarray) -> LorentzMatrix:
    """Pure boost with velocity v (scalar means along x)."""
    vec = _as_velocity(v)
    v2 = float(vec @ vec)
    gamma = 1.0 / np.sqrt(1.0 - v2)
    entries = np.eye(4)
    entries[0, 0] = gamma
    entries[0, 1:] = gamma * vec
    entries[1:, 0] = gamma * vec
    if v2 > 0:
        entries[1:, 1:] += (gamma - 1.0) * np.outer(vec, vec) / v2
    return LorentzMatrix(entries)


def instantaneous_lorentz(zeta: np.ndarray, theta: np.ndarray) -> LorentzMatrix:
    """Matrix exponential of the generator combination for rapidity zeta and rotation theta."""
    zeta = np.asarray(zeta, dtype=float).reshape(3)
    theta = np.asarray(theta, dtype=float).reshape(3)
    if not (np.all(np.isfinite(zeta)) and np.all(np.isfinite(theta))):
        raise ValueError("rapidity and rotation vectors must be finite")
    exponent = sum(z * k for z, k in zip(zeta, _K_REAL)) + sum(t * r for t, r in zip(theta, _J_REAL))
    return LorentzMatrix(np.real_if_close(expm(exponent)).astype(float))


def tilde_momentum(k: np.ndarray, v: float) -> FourVector:
    """Detector-frame covector k~_mu of a null lab mode k for a boost along x."""
    k = np.asarray(k, dtype=float).reshape(3)
    norm = float(np.linalg.norm(k))
    if norm == 0.0:
        raise ZeroMomentum("tilde_momentum requires |k| > 0")
    vec = _as_velocity(v)
    beta = vec[0]
    gamma = 1.0 / np.sqrt(1.0 - beta * beta)
    return FourVector(
        np.array([
            -gamma * (norm - beta * k[0]),
            gamma * (k[0] - beta * norm),
            k[1],
            k[2],
        ]),
        lower=True,
    )


def lab_covector(k: np.ndarray) -> FourVector:
    """Lower-index null covector (-|k|, k) of a lab plane wave."""
    k = np.asarray(k, dtype=float).reshape(3)
    norm = float(np.linalg.norm(k))
    if norm == 0.0:
        raise ZeroMomentum("a field mode requires |k| > 0")
    return FourVector(np.concatenate(([-norm], k)), lower=True)


@dataclass(frozen=True)
class WorldlineSolution:
    """Dense worldline x_cm(tau) on [tau0, tau_end]."""

    tau0: float
    tau_end: float
    _interpolant: Callable[[np.ndarray], np.ndarray] = field(repr=False)

    def __call__(self, tau: float | np.ndarray) -> np.ndarray:
        tau = np.asarray(tau, dtype=float)
        if np.any(tau < self.tau0 - 1e-15) or np.any(tau > self.tau_end + 1e-15):
            raise ValueError(f"tau outside [{self.tau0}, {self.tau_end}]")
        return np.asarray(self._interpolant(tau)).T


def lorentz_at(traj: TrajectorySpec, tau: float) -> LorentzMatrix:
    """Instantaneous transformation of a trajectory at proper time tau."""
    if isinstance(traj, Inertial):
        return boost_matrix(np.asarray(traj.velocity, dtype=float))
    return instantaneous_lorentz(traj.zeta_of_t(tau), traj.theta_of_t(tau))


def integrate_worldline(traj: General, tau_end: float) -> WorldlineSolution:
    """Integrate dx^mu/dtau = Lambda_0^mu(tau) from x(tau0) = 0 with RK45."""
    if tau_end < traj.tau0:
        raise ValueError(f"tau must be >= tau0 = {traj.tau0}, got {tau_end}")
    if tau_end == traj.tau0:
        origin = np.zeros(4)
        return WorldlineSolution(traj.tau0, tau_end, lambda tau: np.multiply.outer(origin, np.ones_like(tau)))

    def rhs(tau: float, _x: np.ndarray) -> np.ndarray:
        return lorentz_at(traj, tau).entries[0, :]

    try:
        solution = solve_ivp(
            rhs,
            (traj.tau0, tau_end),
            np.zeros(4),
            method="RK45",
            rtol=WORLDLINE_RTOL,
            atol=WORLDLINE_ATOL,
            dense_output=True,
        )
    except (ValueError, FloatingPointError) as exc:
        raise IntegrationFailure(f"worldline integration raised: {exc}") from exc
    if not solution.success:
        raise IntegrationFailure(
            f"worldline integration failed after {solution.nfev} evaluations "
            f"at tau={solution.t[-1]:.6g}: {solution.message}"
        )
    return WorldlineSolution(traj.tau0, tau_end, solution.sol)


def worldline(traj: TrajectorySpec, tau: float) -> FourVector:
    """Lab position of the detector centre at proper time tau."""
    if isinstance(traj, Inertial):
        return FourVector(boost_matrix(np.asarray(traj.velocity, dtype=float)).entries[0, :] * tau)
    return FourVector(integrate_worldline(traj, tau)(tau))


def comoving_to_lab(traj: TrajectorySpec, tau: float, xi: np.ndarray) -> FourVector:
    """Lab event of the comoving point xi at proper time tau."""
    xi = np.asarray(xi, dtype=float).reshape(3)
    centre = worldline(traj, tau).components
    spatial_columns = lorentz_at(traj, tau).entries[1:, :]
    return FourVector(centre + spatial_columns.T @ xi)
