"""Special functions used by the closed-form limits."""

from __future__ import annotations

import math
from typing import Callable

from scipy import special

from src.core.errors import DomainError

SPECIAL_FUNCTIONS: dict[str, Callable[[float], float]] = {
    "dawson": special.dawsn,
    "expint_Ei": special.expi,
    "erfi": special.erfi,
    "erf": special.erf,
    "Si": lambda x: special.sici(x)[0],
    "Ci": lambda x: special.sici(x)[1],
    "bessel_J0": special.j0,
    "bessel_J1": special.j1,
    "bessel_J2": lambda x: special.jv(2, x),
}


def special_eval(fn: str, x: float) -> float:
    """Evaluate a named special function at a real argument."""
    if fn not in SPECIAL_FUNCTIONS:
        raise ValueError(f"Unknown special function '{fn}', expected one of {sorted(SPECIAL_FUNCTIONS)}")
    if not math.isfinite(x):
        raise DomainError(f"{fn} needs a finite argument, got {x}")
    if fn == "Ci" and x <= 0:
        raise DomainError(f"Ci is defined for x > 0, got {x}")
    if fn == "expint_Ei" and x == 0:
        raise DomainError("Ei has a logarithmic singularity at 0")
    return float(SPECIAL_FUNCTIONS[fn](x))
