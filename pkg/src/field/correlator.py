"""Plane-wave modes, mode-resolved Wightman kernels and the planar-plate correction.

Points are upper-index FourVectors (t, x, y, z) in natural units. The plate sits
at z = d in the lab; the detector side is z < d.
"""

from __future__ import annotations

from dataclasses import dataclass
import math

import numpy as np

from src.core.errors import PointBeyondPlate, ZeroMomentum
from src.kinematics.lorentz import FourVector

MODE_VOLUME = (2.0 * math.pi) ** 3


@dataclass(frozen=True)
class ModeLabel:
    """Lab momentum of a plane-wave mode."""

    k: tuple[float, float, float]

    def __post_init__(self) -> None:
        if self.norm == 0.0:
            raise ZeroMomentum("a field mode requires |k| > 0")

    @property
    def vector(self) -> np.ndarray:
        return np.asarray(self.k, dtype=float)

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(np.asarray(self.k, dtype=float)))

    def reflected(self) -> ModeLabel:
        """The same mode with k_z reversed."""
        kx, ky, kz = self.k
        return ModeLabel((kx, ky, -kz))


@dataclass(frozen=True)
class PlateKernel:
    """The factor 1 - R exp(2 i k_z d) multiplying the free kernel."""

    value: complex


@dataclass(frozen=True)
class TMatrixElement:
    """Coefficient of a plane-wave T-matrix element; off-diagonal elements vanish."""

    coefficient: complex
    diagonal: bool


def _point(x: FourVector) -> np.ndarray:
    if x.lower:
        x = x.raised()
    return np.asarray(x.components, dtype=float)


def plane_wave_mode(k: ModeLabel, x: FourVector) -> complex:
    """u_k(x) = exp(i(|k| t - k.x)) / sqrt(2 (2 pi)^3 |k|)."""
    point = _point(x)
    phase = k.norm * point[0] - k.vector @ point[1:]
    return complex(np.exp(1j * phase) / math.sqrt(2.0 * MODE_VOLUME * k.norm))


def free_wightman_k(k: ModeLabel, x1: FourVector, x2: FourVector) -> complex:
    """Mode-resolved vacuum kernel u_k*(x1) u_k(x2)."""
    delta = _point(x1) - _point(x2)
    phase = k.norm * delta[0] - k.vector @ delta[1:]
    return complex(np.exp(-1j * phase) / (2.0 * MODE_VOLUME * k.norm))


def plate_factor(kz: complex, d: float, R: complex) -> complex:
    """1 - R exp(2 i kz d); kz may carry a positive imaginary part."""
    return complex(1.0 - R * np.exp(2j * kz * d))


def plate_kernel(k: ModeLabel, d: float, R: complex) -> PlateKernel:
    if not d > 0:
        raise ValueError(f"plate distance must be > 0, got {d}")
    return PlateKernel(plate_factor(k.k[2], d, R))


def tmatrix_plate(k: ModeLabel, kp: ModeLabel, R: complex) -> TMatrixElement:
    """Plate T-matrix in plane waves: -(2 pi)^3 R on the diagonal, zero elsewhere."""
    if not np.array_equal(k.vector, kp.vector):
        return TMatrixElement(coefficient=0j, diagonal=False)
    return TMatrixElement(coefficient=-MODE_VOLUME * complex(R), diagonal=True)


def lippmann_schwinger_k(
    k: ModeLabel,
    r0: FourVector,
    r1: FourVector,
    d: float,
    R: complex,
    surface: FourVector | None = None,
) -> complex:
    """Assemble G0 + G0 T G0 for one mode.

    The scattered term runs r0 -> surface with the reflected label and
    surface -> r1 with k, contracted with the diagonal T element; 2|k| undoes
    the mode normalization of the intermediate propagator. Any event on z = d
    serves as the surface point. For r0 and r1 on the detector plane z = 0 the
    sum is free_wightman_k * plate_kernel(k, d, R).
    """
    if not d > 0:
        raise ValueError(f"plate distance must be > 0, got {d}")
    if surface is None:
        surface = FourVector(np.array([0.0, 0.0, 0.0, d]))
    if not math.isclose(_point(surface)[3], d):
        raise ValueError(f"surface point must lie on z = {d}, got z = {_point(surface)[3]}")
    element = tmatrix_plate(k, k, R)
    free = free_wightman_k(k, r0, r1)
    incoming = free_wightman_k(k.reflected(), r0, surface)
    outgoing = free_wightman_k(k, surface, r1)
    return complex(free + incoming * 2.0 * k.norm * element.coefficient * outgoing)


def mirror(x: FourVector, d: float) -> FourVector:
    """Reflect a point through the plane z = d."""
    point = _point(x).copy()
    point[3] = 2.0 * d - point[3]
    return FourVector(point)


def image_wightman_k(k: ModeLabel, r0: FourVector, r1: FourVector, d: float, R: complex) -> complex:
    """Free kernel minus the R-weighted kernel to the mirror image of r1.

    Equals free_wightman_k(k, r0, r1) * plate_kernel(k.reflected(), d - z1, R),
    which for r1 on the detector plane z = 0 is the plate kernel of the reflected
    mode label (the two labels are interchangeable under the momentum integral).
    """
    if not d > 0:
        raise ValueError(f"plate distance must be > 0, got {d}")
    for name, x in (("r0", r0), ("r1", r1)):
        z = _point(x)[3]
        if z > d:
            raise PointBeyondPlate(f"{name} has z = {z} beyond the plate at z = {d}")
    return complex(free_wightman_k(k, r0, r1) - R * free_wightman_k(k, r0, mirror(r1, d)))
