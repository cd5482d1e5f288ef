"""The two Meijer-G families of the excited-state contact limits, as principal-value integrals.

With Omega = sqrt(2) y (sigma = 1):

    friction: G = -1/(pi Omega^2) PV int_0^inf s^2 exp(-s^2/2) / (s - Omega) ds
    casimir:  G = -1/(pi Omega^3) PV int_0^inf s^3 exp(-s^2/2) / (s - Omega) ds
"""

from __future__ import annotations

import math

import numpy as np

from src.numerics.quadrature import ToleranceSpec, integrate_pv

MEIJER_KINDS = ("friction", "casimir")

_POWERS = {"friction": 2, "casimir": 3}

MEIJER_TOLERANCE = ToleranceSpec(rel_tol=1e-11, abs_tol=1e-14)


def meijer_principal_value(kind: str, omega: float, tol: ToleranceSpec | None = None) -> float:
    """PV int_0^inf s^n exp(-s^2/2)/(s - omega) ds, n = 2 (friction) or 3 (casimir)."""
    if kind not in MEIJER_KINDS:
        raise ValueError(f"Unknown Meijer kind '{kind}', expected one of {MEIJER_KINDS}")
    if not omega > 0:
        raise ValueError(f"omega must be > 0, got {omega}")
    power = _POWERS[kind]
    result = integrate_pv(
        lambda s: s**power * np.exp(-0.5 * s**2),
        omega,
        0.0,
        math.inf,
        tol or MEIJER_TOLERANCE,
        breakpoints=[omega + 12.0],
        context=f"meijer[{kind}]",
    )
    return float(result.require(f"meijer[{kind}]").value)


def meijer_reduced(kind: str, y: float, tol: ToleranceSpec | None = None) -> float:
    """G for y = sigma*Omega/(sqrt(2) c), in units where sigma = c = 1."""
    if not y > 0:
        raise ValueError(f"y must be > 0, got {y}")
    omega = math.sqrt(2.0) * y
    power = _POWERS.get(kind, 0)
    return -meijer_principal_value(kind, omega, tol) / (math.pi * omega**power)


def meijer_limits(kind: str, y: float) -> tuple[float, float]:
    """(small-argument, large-argument) limits of meijer_reduced."""
    if kind not in MEIJER_KINDS:
        raise ValueError(f"Unknown Meijer kind '{kind}', expected one of {MEIJER_KINDS}")
    omega = math.sqrt(2.0) * y
    if kind == "friction":
        return -1.0 / (math.pi * omega**2), 1.0 / (math.sqrt(2.0 * math.pi) * omega**3)
    return -1.0 / (math.sqrt(2.0 * math.pi) * omega**3), 2.0 / (math.pi * omega**4)
