"""Per-mode factors of the force integrand: smearing, switching, regulator and plate pieces."""

from __future__ import annotations

from dataclasses import dataclass
import math
from typing import Sequence

import numpy as np

from src.core.errors import InvalidSmearing
from src.core.params import DetectorState, lorentz_factor, validate_state


def boosted_k_squared(k: np.ndarray, v: float) -> np.ndarray:
    """Spatial square of the detector-frame momentum for a boost along x."""
    k = np.asarray(k, dtype=float)
    gamma = lorentz_factor(v)
    norm = np.linalg.norm(k, axis=-1)
    return gamma**2 * (k[..., 0] - v * norm) ** 2 + k[..., 1] ** 2 + k[..., 2] ** 2


def detector_frequency(k: np.ndarray, v: float) -> np.ndarray:
    """s = gamma(|k| - v k_x) = -k~_0, the mode frequency seen by the detector."""
    k = np.asarray(k, dtype=float)
    return lorentz_factor(v) * (np.linalg.norm(k, axis=-1) - v * k[..., 0])


def shell_momentum(theta: np.ndarray, phi: np.ndarray, s_star: float, v: float) -> np.ndarray:
    """Lab momenta along (theta, phi) about the x axis whose detector frequency is s_star."""
    norm = s_star / (lorentz_factor(v) * (1.0 - v * np.cos(theta)))
    sin = np.sin(theta)
    components = np.broadcast_arrays(norm * np.cos(theta), norm * sin * np.cos(phi), norm * sin * np.sin(phi))
    return np.stack(components, axis=-1)


def gaussian_smearing_ft(k_tilde: np.ndarray, sigma: float) -> np.ndarray | float:
    """exp(-sigma^2 |k~|^2 / 2) for detector-frame momenta k~ (last axis of length 3)."""
    if not sigma > 0:
        raise InvalidSmearing(f"sigma must be > 0, got {sigma}")
    k_tilde = np.asarray(k_tilde, dtype=float)
    value = np.exp(-0.5 * sigma**2 * np.sum(k_tilde**2, axis=-1))
    return float(value) if value.ndim == 0 else value


def smearing_weight(s: np.ndarray, sigma: float = 1.0) -> np.ndarray:
    """|f(k~)|^2 of the Gaussian profile as a function of s = |k~|."""
    return np.exp(-0.5 * sigma**2 * np.asarray(s) ** 2)


def beta_factor(omega_eff: complex, ck0_tilde: np.ndarray | float, delta_tau: float) -> np.ndarray | complex:
    """i alpha (-1 + exp(-i dtau C)) with alpha = 1/C and C = omega_eff - c k~_0.

    Written as dtau exp(-i x/2) sin(x/2)/(x/2), x = dtau C, which is continuous
    through resonance where it equals dtau.
    """
    if delta_tau < 0:
        raise ValueError(f"delta_tau must be >= 0, got {delta_tau}")
    x = delta_tau * (omega_eff - np.asarray(ck0_tilde))
    value = delta_tau * np.exp(-0.5j * x) * np.sinc(x / (2.0 * np.pi))
    return complex(value) if np.ndim(value) == 0 else value


def switching_terms(c: np.ndarray, delta_tau: float) -> tuple[np.ndarray, np.ndarray]:
    """(2 sin^2(dtau C/2)/C, sin(dtau C)/C), both regular at C = 0."""
    c = np.asarray(c, dtype=float)
    half = 0.5 * delta_tau * c
    s2 = delta_tau * np.sin(half) * np.sinc(half / np.pi)
    s1 = delta_tau * np.sinc(delta_tau * c / np.pi)
    return s2, s1


@dataclass(frozen=True)
class AlphaSplit:
    """Real and imaginary parts of the regulated alpha, or its Gamma -> 0 distributional split."""

    alpha_r: np.ndarray | float
    alpha_i: np.ndarray | float
    pv_weight: np.ndarray | float
    delta_weight: float
    on_shell: np.ndarray | bool
    gamma: float


def alpha_split(omega: float, ck0_tilde: np.ndarray | float, gamma: float) -> AlphaSplit:
    """alpha = 1/(C + i sgn(omega) Gamma) with C = omega - c k~_0.

    At Gamma = 0 the real part is the principal-value kernel and the imaginary
    part is -pi sgn(omega) times a delta function on the shell C = 0.
    """
    if gamma < 0:
        raise ValueError(f"gamma must be >= 0, got {gamma}")
    c = omega - np.asarray(ck0_tilde, dtype=float)
    sign = float(np.sign(omega))
    on_shell = c == 0
    if gamma > 0:
        denom = gamma**2 + c**2
        alpha_r = c / denom
        alpha_i = -sign * gamma / denom
        return AlphaSplit(alpha_r, alpha_i, alpha_r, 0.0, on_shell, gamma)
    with np.errstate(divide="ignore"):
        pv = np.where(on_shell, 0.0, 1.0 / np.where(on_shell, 1.0, c))
    if np.ndim(pv) == 0:
        pv = float(pv)
        on_shell = bool(on_shell)
    return AlphaSplit(pv, 0.0, pv, -math.pi * sign, on_shell, 0.0)


@dataclass(frozen=True)
class StateWeight:
    """Excited population a; the coherence of the initial state never enters."""

    a: float

    @classmethod
    def from_state(cls, state: DetectorState) -> StateWeight:
        return cls(validate_state(state).excited_pop)

    def channels(self, omega: float) -> tuple[tuple[float, float], tuple[float, float]]:
        """(weight, effective gap) for the ground and excited channels."""
        return (1.0 - self.a, omega), (self.a, -omega)


@dataclass(frozen=True)
class PlateIntegrandPieces:
    """The A, B, C, V combinations of the plate-corrected force integrand."""

    A: np.ndarray | float
    B: np.ndarray | float
    C: np.ndarray | float
    V: np.ndarray | complex

    def bracket(self, delta_tau: float) -> np.ndarray | float:
        """2 A sin^2(dtau C/2) + B sin(dtau C)."""
        c = np.asarray(self.C)
        return 2.0 * self.A * np.sin(0.5 * delta_tau * c) ** 2 + self.B * np.sin(delta_tau * c)

    def long_time_bracket(self) -> np.ndarray | float:
        """The bracket after sin(dtau C) -> 0 and sin^2(dtau C/2) -> 1/2."""
        return self.A


def plate_pieces(
    alpha_r: np.ndarray | float,
    alpha_i: np.ndarray | float,
    R: complex,
    V: np.ndarray | complex,
    C: np.ndarray | float,
) -> PlateIntegrandPieces:
    r_r, r_i = complex(R).real, complex(R).imag
    v_r, v_i = np.real(V), np.imag(V)
    a = alpha_i * r_i * v_i - alpha_i * r_r * v_r - alpha_r * r_r * v_i - alpha_r * r_i * v_r
    b = alpha_i * r_r * v_i + alpha_i * r_i * v_r + alpha_r * r_i * v_i - alpha_r * r_r * v_r
    return PlateIntegrandPieces(A=a, B=b, C=C, V=V)


def extrapolate_regulator(gammas: Sequence[float], values: Sequence[float]) -> tuple[float, float]:
    """Richardson-extrapolate values(Gamma) to Gamma = 0 by Neville's scheme.

    Returns the extrapolated value and the change of the last extrapolation step
    as its error estimate.
    """
    if len(gammas) != len(values) or len(gammas) < 2:
        raise ValueError("need at least two (gamma, value) pairs of equal length")
    x = [float(g) for g in gammas]
    if len(set(x)) != len(x) or min(x) <= 0:
        raise ValueError("regulator values must be distinct and positive")
    table = [float(v) for v in values]
    previous = table[-1]
    for level in range(1, len(x)):
        if level == len(x) - 1:
            previous = table[1]
        for i in range(len(x) - level):
            table[i] = (x[i + level] * table[i] - x[i] * table[i + 1]) / (x[i + level] - x[i])
    return table[0], abs(table[0] - previous)
