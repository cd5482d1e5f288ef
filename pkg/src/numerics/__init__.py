from src.numerics.quadrature import (
    ZERO_RESULT,
    QuadratureResult,
    ToleranceSpec,
    integrate_1d,
    integrate_pv,
    integrate_sphere,
    onshell_surface_integral,
)

__all__ = [
    "ZERO_RESULT",
    "QuadratureResult",
    "ToleranceSpec",
    "integrate_1d",
    "integrate_pv",
    "integrate_sphere",
    "onshell_surface_integral",
]
