"""Polar-angle integrals of the plate force and their large-argument limits.

With theta the lab angle from the velocity axis and u = sin(theta)/(1 - v cos(theta)):

    I0 = int sin cos / (1 - v cos)^3 J0(2 dt u / gamma) dtheta
    I1 = int sin^2   / (1 - v cos)^3 J1(2 dt u / gamma) dtheta
    It = int sin     / (1 - v cos)^3 J0(2 dt u / gamma) dtheta

Changing to the detector-frame angle turns each into a spherical Bessel function:
I0 = 2 gamma^4 v j0(2dt), I1 = 2 gamma^3 j1(2dt), It = 2 gamma^4 j0(2dt).
"""

from __future__ import annotations

import math

import numpy as np
from scipy import special

from src.core.params import lorentz_factor
from src.numerics.quadrature import ToleranceSpec, integrate_1d, integrate_sphere

ANGULAR_KINDS = ("I0", "I1", "It")
LIMIT_KINDS = ("C0", "C1")
AZIMUTHAL_COMPONENTS = ("t", "x", "y", "z")
AZIMUTHAL_PHASES = ("re", "im")


def _check_kind(kind: str, allowed: tuple[str, ...]) -> None:
    if kind not in allowed:
        raise ValueError(f"Unknown angular kind '{kind}', expected one of {allowed}")


def angular_integral(kind: str, v: float, dt: float, tol: ToleranceSpec | None = None) -> float:
    """Direct theta quadrature of I0, I1 or It."""
    _check_kind(kind, ANGULAR_KINDS)
    gamma = lorentz_factor(v)
    if not dt > 0:
        raise ValueError(f"dt must be > 0, got {dt}")
    tol = tol or ToleranceSpec(rel_tol=1e-11, abs_tol=1e-14)

    def integrand(theta: np.ndarray) -> np.ndarray:
        sin, cos = np.sin(theta), np.cos(theta)
        denom = 1.0 - v * cos
        argument = 2.0 * dt * sin / (gamma * denom)
        if kind == "I0":
            return sin * cos / denom**3 * special.j0(argument)
        if kind == "I1":
            return sin**2 / denom**3 * special.j1(argument)
        return sin / denom**3 * special.j0(argument)

    # the integrand is concentrated within a few 1/gamma of the velocity axis
    forward = sorted({m / gamma for m in (0.25, 0.5, 1.0, 2.0, 4.0, 8.0) if m / gamma < math.pi} | {math.pi / 2})
    result = integrate_1d(
        integrand,
        0.0,
        math.pi,
        tol,
        breakpoints=forward,
        panel_width=math.pi / max(4.0, 4.0 * dt),
        context=f"angular_integral[{kind}]",
    )
    return float(result.require(f"angular_integral[{kind}]").value)


def exact_angular_integral(kind: str, v: float, dt: np.ndarray | float) -> np.ndarray | float:
    """Closed form of I0, I1 or It through spherical Bessel functions."""
    _check_kind(kind, ANGULAR_KINDS)
    gamma = lorentz_factor(v)
    x = 2.0 * np.asarray(dt, dtype=float)
    if kind == "I0":
        value = 2.0 * gamma**4 * v * special.spherical_jn(0, x)
    elif kind == "I1":
        value = 2.0 * gamma**3 * special.spherical_jn(1, x)
    else:
        value = 2.0 * gamma**4 * special.spherical_jn(0, x)
    return float(value) if np.ndim(value) == 0 else value


def angular_limit_C(kind: str, v: float, dt: np.ndarray | float) -> np.ndarray | float:
    """Large-dt limits C0 = gamma^4 v sin(2dt)/dt and C1 = -gamma^3 cos(2dt)/dt."""
    _check_kind(kind, LIMIT_KINDS)
    gamma = lorentz_factor(v)
    dt = np.asarray(dt, dtype=float)
    if kind == "C0":
        value = gamma**4 * v * np.sin(2.0 * dt) / dt
    else:
        value = -(gamma**3) * np.cos(2.0 * dt) / dt
    return float(value) if np.ndim(value) == 0 else value


def azimuthal_integral(
    component: str, v: float, dt: float, phase: str, tol: ToleranceSpec | None = None
) -> float:
    """Angular integral with the azimuth kept explicit, over the sphere of lab directions.

    Integrates n_mu / (1 - v cos)^3 times cos or sin of (2 dt u / gamma) sin(phi),
    divided by 2 pi, with n = (1, cos, sin cos(phi), sin sin(phi)) and the plate
    normal along phi = pi/2. ("t", "re"), ("x", "re") and ("z", "im") reproduce
    It, I0 and I1; the y component and the other phases vanish by azimuthal parity.
    """
    if component not in AZIMUTHAL_COMPONENTS:
        raise ValueError(f"Unknown component '{component}', expected one of {AZIMUTHAL_COMPONENTS}")
    if phase not in AZIMUTHAL_PHASES:
        raise ValueError(f"Unknown phase '{phase}', expected one of {AZIMUTHAL_PHASES}")
    gamma = lorentz_factor(v)
    if not dt > 0:
        raise ValueError(f"dt must be > 0, got {dt}")
    tol = tol or ToleranceSpec(rel_tol=1e-11, abs_tol=1e-14)
    trig = np.cos if phase == "re" else np.sin

    def integrand(theta: np.ndarray, phi: np.ndarray) -> np.ndarray:
        sin, cos = np.sin(theta), np.cos(theta)
        denom = 1.0 - v * cos
        argument = 2.0 * dt * sin / (gamma * denom)
        direction = {
            "t": np.ones_like(theta * phi),
            "x": cos * np.ones_like(phi),
            "y": sin * np.cos(phi),
            "z": sin * np.sin(phi),
        }[component]
        return direction / denom**3 * trig(argument * np.sin(phi)) / (2.0 * math.pi)

    context = f"azimuthal_integral[{component},{phase}]"
    result = integrate_sphere(integrand, tol, context=context)
    return float(np.real(result.require(context).value))
