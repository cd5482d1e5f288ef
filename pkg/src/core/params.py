"""Detector parameters, states, boundaries and the dimensionless groups built from them."""

from __future__ import annotations

from dataclasses import dataclass
import math

from src.core.errors import FasterThanLight, InvalidSmearing, NotDensityMatrix

NATURAL = "natural"
SI = "si"

SPEED_OF_LIGHT_SI = 299_792_458.0
HBAR_SI = 1.054_571_817e-34

DENSITY_TOLERANCE = 1e-12


@dataclass(frozen=True)
class PhysicalScales:
    """Values of c and hbar for the unit system the caller works in."""

    c: float
    hbar: float
    unit_mode: str

    def __post_init__(self) -> None:
        if self.unit_mode not in (NATURAL, SI):
            raise ValueError(f"unit_mode must be '{NATURAL}' or '{SI}', got {self.unit_mode!r}")
        if self.c <= 0 or self.hbar <= 0:
            raise ValueError("c and hbar must be positive")
        if self.unit_mode == NATURAL and (self.c != 1.0 or self.hbar != 1.0):
            raise ValueError("natural units require c = hbar = 1")


NATURAL_SCALES = PhysicalScales(c=1.0, hbar=1.0, unit_mode=NATURAL)
SI_SCALES = PhysicalScales(c=SPEED_OF_LIGHT_SI, hbar=HBAR_SI, unit_mode=SI)


@dataclass(frozen=True)
class DetectorParams:
    """Gap, smearing width, coupling and regulator of a two-level detector."""

    gap_omega: float
    smearing_sigma: float
    coupling_lambda: float = 1.0
    regulator_gamma: float = 0.0

    def __post_init__(self) -> None:
        if not math.isfinite(self.smearing_sigma) or self.smearing_sigma < 0:
            raise InvalidSmearing(f"smearing_sigma must be >= 0, got {self.smearing_sigma}")
        if not math.isfinite(self.gap_omega) or self.gap_omega < 0:
            raise ValueError(f"gap_omega must be >= 0, got {self.gap_omega}")
        if not math.isfinite(self.coupling_lambda) or self.coupling_lambda <= 0:
            raise ValueError(f"coupling_lambda must be > 0, got {self.coupling_lambda}")
        if not math.isfinite(self.regulator_gamma) or self.regulator_gamma < 0:
            raise ValueError(f"regulator_gamma must be >= 0, got {self.regulator_gamma}")


@dataclass(frozen=True)
class DetectorState:
    """Initial density matrix [[a, b], [b*, 1 - a]] in the (excited, ground) basis."""

    excited_pop: float
    coherence: complex = 0j


@dataclass(frozen=True)
class FreeSpace:
    """No boundary: the vacuum correlator only."""


@dataclass(frozen=True)
class Plate:
    """Reflecting plate at z = d with a frequency-independent reflection coefficient."""

    distance: float
    reflection: complex

    def __post_init__(self) -> None:
        if not math.isfinite(self.distance) or self.distance <= 0:
            raise ValueError(f"plate distance must be > 0, got {self.distance}")
        if abs(self.reflection) > 1.0 + 1e-15:
            raise ValueError(f"|R| must be <= 1, got {abs(self.reflection)}")


Boundary = FreeSpace | Plate


@dataclass(frozen=True)
class SwitchingWindow:
    """Proper time elapsed since the interaction was switched on."""

    delta_tau: float

    def __post_init__(self) -> None:
        if math.isnan(self.delta_tau) or self.delta_tau < 0:
            raise ValueError(f"delta_tau must be >= 0, got {self.delta_tau}")


@dataclass(frozen=True)
class DimensionlessGroups:
    """The recurring dimensionless combinations of a configuration."""

    y: float
    x_gap: float
    t_gap: float
    d_ratio: float | None
    beta_v: float
    gamma_lorentz: float


def lorentz_factor(beta: float) -> float:
    """Return gamma for a speed given as a fraction of c."""
    if not math.isfinite(beta) or abs(beta) >= 1.0:
        raise FasterThanLight(f"|v|/c must be < 1, got {beta}")
    return 1.0 / math.sqrt((1.0 - beta) * (1.0 + beta))


def require_finite_size(params: DetectorParams) -> None:
    """Reject the pointlike limit on paths that integrate over momenta."""
    if params.smearing_sigma <= 0:
        raise InvalidSmearing("a finite smearing width is required for momentum-space quadrature")


def to_dimensionless(
    params: DetectorParams,
    boundary: Boundary,
    v: float,
    window: SwitchingWindow,
    scales: PhysicalScales = NATURAL_SCALES,
) -> DimensionlessGroups:
    """Collect sigma*Omega/c, Omega*dtau, d/sigma, v/c and gamma for a configuration."""
    require_finite_size(params)
    beta = v / scales.c
    gamma = lorentz_factor(beta)
    x_gap = params.smearing_sigma * params.gap_omega / scales.c
    d_ratio = boundary.distance / params.smearing_sigma if isinstance(boundary, Plate) else None
    return DimensionlessGroups(
        y=x_gap / math.sqrt(2.0),
        x_gap=x_gap,
        t_gap=params.gap_omega * window.delta_tau,
        d_ratio=d_ratio,
        beta_v=beta,
        gamma_lorentz=gamma,
    )


def from_dimensionless(
    groups: DimensionlessGroups,
    sigma: float = 1.0,
    scales: PhysicalScales = NATURAL_SCALES,
) -> tuple[DetectorParams, Boundary, float, SwitchingWindow]:
    """Rebuild (params, boundary, v, window) at a chosen smearing width."""
    if sigma <= 0:
        raise InvalidSmearing(f"sigma must be > 0, got {sigma}")
    omega = groups.x_gap * scales.c / sigma
    if groups.t_gap and omega == 0:
        raise ValueError("t_gap cannot be reconstructed for a zero gap")
    delta_tau = groups.t_gap / omega if omega else 0.0
    boundary: Boundary = FreeSpace()
    if groups.d_ratio is not None:
        boundary = Plate(distance=groups.d_ratio * sigma, reflection=1.0 + 0j)
    params = DetectorParams(gap_omega=omega, smearing_sigma=sigma)
    return params, boundary, groups.beta_v * scales.c, SwitchingWindow(delta_tau)


def validate_state(state: DetectorState) -> DetectorState:
    """Accept the state iff 0 <= a <= 1 and |b|^2 <= a(1 - a)."""
    a = state.excited_pop
    b = complex(state.coherence)
    if not math.isfinite(a) or a < 0.0 or a > 1.0:
        raise NotDensityMatrix(f"excited population a must lie in [0, 1], got {a}")
    if not (math.isfinite(b.real) and math.isfinite(b.imag)):
        raise NotDensityMatrix("coherence b must be finite")
    if abs(b) ** 2 > a * (1.0 - a) + DENSITY_TOLERANCE:
        raise NotDensityMatrix(
            f"positivity violated: |b|^2 = {abs(b) ** 2:.6g} > a(1-a) = {a * (1.0 - a):.6g}"
        )
    return state


def natural_params(params: DetectorParams, scales: PhysicalScales) -> DetectorParams:
    """Express params with c = hbar = 1 and lengths in units of sigma."""
    require_finite_size(params)
    sigma = params.smearing_sigma
    return DetectorParams(
        gap_omega=params.gap_omega * sigma / scales.c,
        smearing_sigma=1.0,
        coupling_lambda=params.coupling_lambda,
        regulator_gamma=params.regulator_gamma * sigma / scales.c,
    )


def natural_inputs(
    params: DetectorParams,
    boundary: Boundary,
    v: float,
    window: SwitchingWindow,
    scales: PhysicalScales,
) -> tuple[DetectorParams, Boundary, float, SwitchingWindow]:
    """Convert a full configuration to natural units with sigma = 1."""
    sigma = params.smearing_sigma
    natural = natural_params(params, scales)
    if isinstance(boundary, Plate):
        boundary = Plate(distance=boundary.distance / sigma, reflection=boundary.reflection)
    return natural, boundary, v / scales.c, SwitchingWindow(window.delta_tau * scales.c / sigma)


def force_unit(params: DetectorParams, scales: PhysicalScales) -> float:
    """Return hbar*c*lambda^2/sigma^2, the physical size of a natural-unit force."""
    require_finite_size(params)
    return scales.hbar * scales.c * params.coupling_lambda**2 / params.smearing_sigma**2
