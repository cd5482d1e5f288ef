"""Four-force results, their normalizations and state mixing."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
import math
from typing import Any

from src.core.errors import NormalizationMismatch
from src.core.params import DetectorParams, DimensionlessGroups, PhysicalScales, force_unit

RAW = "raw_natural"
FRICTION = "friction_units"
CASIMIR = "casimir_units"
SI_NEWTON = "si_newton"
NORMALIZATIONS = (RAW, FRICTION, CASIMIR, SI_NEWTON)

COMPONENT_NAMES = ("t", "x", "y", "z")

FINITE_TIME = "finite_time"
LONG_TIME = "long_time"
REGIMES = (FINITE_TIME, LONG_TIME)


@dataclass(frozen=True)
class ForceComponents:
    """Components (t, x, y, z) with per-component quadrature errors.

    Raw values are in units of hbar*c*lambda^2/sigma^2. `parts` holds named
    contributions (for instance "pv" and "delta") that sum to the total.
    """

    F: tuple[float, float, float, float]
    err: tuple[float, float, float, float]
    normalization: str = RAW
    converged: bool = True
    parts: dict[str, ForceComponents] = field(default_factory=dict)

    @property
    def t(self) -> float:
        return self.F[0]

    @property
    def x(self) -> float:
        return self.F[1]

    @property
    def y(self) -> float:
        return self.F[2]

    @property
    def z(self) -> float:
        return self.F[3]

    def __add__(self, other: ForceComponents) -> ForceComponents:
        if self.normalization != other.normalization:
            raise NormalizationMismatch(f"cannot add {self.normalization} to {other.normalization}")
        return ForceComponents(
            F=tuple(a + b for a, b in zip(self.F, other.F)),
            err=tuple(math.hypot(a, b) for a, b in zip(self.err, other.err)),
            normalization=self.normalization,
            converged=self.converged and other.converged,
        )

    def scaled(self, factor: float, normalization: str) -> ForceComponents:
        return ForceComponents(
            F=tuple(value * factor for value in self.F),
            err=tuple(e * abs(factor) for e in self.err),
            normalization=normalization,
            converged=self.converged,
            parts={name: part.scaled(factor, normalization) for name, part in self.parts.items()},
        )

    def to_si(self, params: DetectorParams, scales: PhysicalScales) -> ForceComponents:
        """Multiply a raw result by hbar*c*lambda^2/sigma^2."""
        if self.normalization != RAW:
            raise NormalizationMismatch(f"to_si needs {RAW} input, got {self.normalization}")
        return self.scaled(force_unit(params, scales), SI_NEWTON)

    def to_mapping(self) -> dict[str, Any]:
        record: dict[str, Any] = {
            "normalization": self.normalization,
            "converged": self.converged,
        }
        for name, value, error in zip(COMPONENT_NAMES, self.F, self.err):
            record[f"F_{name}"] = value
            record[f"err_{name}"] = error
        for name, part in sorted(self.parts.items()):
            record[name] = part.to_mapping()
        return record


def zero_force(normalization: str = RAW) -> ForceComponents:
    return ForceComponents(F=(0.0, 0.0, 0.0, 0.0), err=(0.0, 0.0, 0.0, 0.0), normalization=normalization)


def mix_force(a: float, F_ground: ForceComponents, F_excited: ForceComponents) -> ForceComponents:
    """(1 - a) F_ground + a F_excited, errors combined in quadrature."""
    if not 0.0 <= a <= 1.0:
        raise ValueError(f"excited population must lie in [0, 1], got {a}")
    if F_ground.normalization != F_excited.normalization:
        raise NormalizationMismatch(
            f"cannot mix {F_ground.normalization} with {F_excited.normalization}"
        )
    parts = {
        name: mix_force(a, F_ground.parts[name], F_excited.parts[name])
        for name in F_ground.parts
        if name in F_excited.parts
    }
    return ForceComponents(
        F=tuple((1.0 - a) * g + a * e for g, e in zip(F_ground.F, F_excited.F)),
        err=tuple(math.hypot((1.0 - a) * g, a * e) for g, e in zip(F_ground.err, F_excited.err)),
        normalization=F_ground.normalization,
        converged=F_ground.converged and F_excited.converged,
        parts=parts,
    )


def normalization_divisor(kind: str, groups: DimensionlessGroups) -> float:
    """Reference force of a normalization, in units of hbar*c*lambda^2/sigma^2."""
    if kind == RAW:
        return 1.0
    if groups.x_gap == 0:
        raise ValueError(f"{kind} is undefined for a zero gap")
    if kind == FRICTION:
        if groups.beta_v == 0:
            raise ValueError(f"{FRICTION} is undefined at v = 0")
        return groups.x_gap**2 * groups.gamma_lorentz * groups.beta_v / (2.0 * math.pi**2)
    if kind == CASIMIR:
        return groups.x_gap**2 / (2.0 * math.pi**2)
    raise ValueError(f"Unknown normalization '{kind}', expected one of {NORMALIZATIONS[:3]}")


def normalize(force: ForceComponents, kind: str, groups: DimensionlessGroups) -> ForceComponents:
    """Express a raw result in friction or Casimir units."""
    if force.normalization != RAW:
        raise NormalizationMismatch(f"normalize needs {RAW} input, got {force.normalization}")
    if kind == RAW:
        return force
    return force.scaled(1.0 / normalization_divisor(kind, groups), kind)


def with_parts(force: ForceComponents, **parts: ForceComponents) -> ForceComponents:
    return replace(force, parts=dict(parts))


def check_regime(regime: str) -> str:
    if regime not in REGIMES:
        raise ValueError(f"Unknown regime '{regime}', expected one of {REGIMES}")
    return regime
