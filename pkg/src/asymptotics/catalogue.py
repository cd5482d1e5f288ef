"""Closed-form limits of the free-space and plate forces, one per regime key.

Every formula is written with explicit hbar, c and lambda so the result is a
force in the caller's unit system; with natural scales and sigma = 1 it is
directly comparable with raw engine output.
"""

from __future__ import annotations

from dataclasses import dataclass
import math
from typing import Callable

from src.asymptotics.meijer import meijer_reduced
from src.asymptotics.special import special_eval
from src.core.errors import UnknownRegime
from src.core.events import emit
from src.core.params import NATURAL_SCALES, DetectorParams, PhysicalScales, SwitchingWindow, lorentz_factor

STATES = ("ground", "excited")
COMPONENTS = ("friction_x", "casimir_z")
TIMES = ("short", "long")
DISTANCES = ("small_d", "large_d", "pointlike", "free")
VELOCITIES = ("small_v", "high_v", "any")
CONTRIBUTIONS = ("total", "pv", "delta")

LINEAR = "linear"
QUADRATIC = "quadratic"
TOTAL = "total"

# advisory validity corners
SMALL_D_MAX = 0.1
LARGE_D_MIN = 5.0
SHORT_T_MAX = 0.1
LONG_T_MIN = 10.0
SMALL_V_MAX = 0.1
HIGH_V_MIN = 0.9


@dataclass(frozen=True)
class RegimeKey:
    """One cell of the catalogue of closed-form limits."""

    state: str
    component: str
    time: str
    distance: str
    velocity: str = "any"
    contribution: str = "total"

    def __post_init__(self) -> None:
        for name, allowed in (
            ("state", STATES),
            ("component", COMPONENTS),
            ("time", TIMES),
            ("distance", DISTANCES),
            ("velocity", VELOCITIES),
            ("contribution", CONTRIBUTIONS),
        ):
            if getattr(self, name) not in allowed:
                raise UnknownRegime(f"{name} must be one of {allowed}, got {getattr(self, name)!r}")
        if self.as_tuple() not in _FORMULAS:
            raise UnknownRegime(f"no closed form for {self.as_tuple()}")

    def as_tuple(self) -> tuple[str, str, str, str, str, str]:
        return (self.state, self.component, self.time, self.distance, self.velocity, self.contribution)

    @property
    def label(self) -> str:
        return "/".join(self.as_tuple())


@dataclass(frozen=True)
class _Inputs:
    hbar: float
    c: float
    lam2: float
    omega: float
    sigma: float
    dtau: float
    d: float
    r_r: float
    r_i: float
    gv: float

    @property
    def y(self) -> float:
        return self.sigma * self.omega / (math.sqrt(2.0) * self.c)

    @property
    def weight(self) -> float:
        return math.exp(-(self.sigma**2) * self.omega**2 / (2.0 * self.c**2))

    @property
    def phase(self) -> float:
        return 2.0 * self.d * self.omega / self.c


Terms = dict[str, float]
Formula = Callable[[_Inputs], Terms]


# free space


def _free_short(p: _Inputs) -> Terms:
    value = (
        -p.gv * p.hbar * p.c**2 * p.lam2 / (2.0 * math.sqrt(2.0 * math.pi**3))
        * p.dtau / p.sigma**3 * math.exp(-(p.c**2) * p.dtau**2 / (2.0 * p.sigma**2))
    )
    return {TOTAL: value}


def _free_ground_long(p: _Inputs) -> Terms:
    oscillation = math.cos(p.dtau * p.omega) / (p.omega * p.dtau**3)
    return {TOTAL: p.gv * p.hbar * p.lam2 / (p.c * math.pi**2) * oscillation}


def _free_excited_steady(p: _Inputs) -> float:
    return -p.gv * p.hbar * p.lam2 / (2.0 * math.pi * p.c) * p.omega**2 * p.weight


def _free_excited_long(p: _Inputs) -> Terms:
    oscillation = math.cos(p.dtau * p.omega) / (p.omega * p.dtau**3)
    return {TOTAL: _free_excited_steady(p) - p.gv * p.hbar * p.lam2 / (p.c * math.pi**2) * oscillation}


def _free_excited_delta(p: _Inputs) -> Terms:
    return {TOTAL: _free_excited_steady(p)}


# ground state, friction


def _gfx_short_small(p: _Inputs) -> Terms:
    return {
        LINEAR: -p.gv * p.hbar * p.c**2 * p.dtau / p.sigma**3 * p.lam2 / (2.0 * math.pi) ** 1.5 * p.r_r,
        QUADRATIC: -p.gv * p.hbar * p.c**3 * p.dtau**2 / p.sigma**4 * p.lam2 / (8.0 * math.pi**2) * p.r_i
        * (4.0 + math.sqrt(2.0 * math.pi) * p.sigma * p.omega / p.c),
    }


def _gfx_short_large(p: _Inputs) -> Terms:
    return {
        LINEAR: -p.gv * p.hbar * p.c**2 * p.dtau / p.sigma**3 * p.lam2 / (2.0 * math.pi) ** 1.5 * p.r_r
        * math.exp(-2.0 * p.d**2 / p.sigma**2),
        QUADRATIC: p.gv * p.hbar * p.c**3 * p.dtau**2 / p.d**4 * p.lam2 / (32.0 * math.pi**2) * p.r_i,
    }


def ground_friction_bracket(y: float) -> float:
    """1 - sqrt(pi) y + y^2 (2 sqrt(pi) D(y) - exp(-y^2) Ei(y^2))."""
    return 1.0 - math.sqrt(math.pi) * y + y**2 * (
        2.0 * math.sqrt(math.pi) * special_eval("dawson", y)
        - math.exp(-(y**2)) * special_eval("expint_Ei", y**2)
    )


def _gfx_long_small(p: _Inputs) -> Terms:
    prefactor = -p.hbar * p.c / p.sigma**2 * p.r_i * p.lam2 / (2.0 * math.pi**2) * p.gv
    return {TOTAL: prefactor * ground_friction_bracket(p.y)}


def _gfx_long_large(p: _Inputs) -> Terms:
    return {TOTAL: -p.gv * p.hbar * p.c**3 / (p.omega**2 * p.d**4) * p.lam2 / (16.0 * math.pi**2) * p.r_i}


# ground state, Casimir


def _gcz_short_small(p: _Inputs) -> Terms:
    return {
        LINEAR: p.hbar * p.c**2 * p.d * p.dtau / p.sigma**4 * 2.0 * p.lam2 / (3.0 * math.pi**2) * p.r_i,
        QUADRATIC: -p.hbar * p.c**3 * p.d * p.dtau**2 / p.sigma**5 * p.r_r * p.lam2 / (12.0 * math.pi**2)
        * (3.0 * math.sqrt(2.0 * math.pi) + 4.0 * p.sigma * p.omega / p.c),
    }


def _gcz_short_large(p: _Inputs) -> Terms:
    return {
        LINEAR: p.hbar * p.c**2 * p.dtau / p.d**3 * 7.0 * p.lam2 / (64.0 * math.pi**2) * p.r_i,
        QUADRATIC: -p.hbar * p.c**2 * p.omega / p.d**3 * 7.0 * p.lam2 / (128.0 * math.pi**2) * p.dtau**2 * p.r_r,
    }


def ground_casimir_bracket(y: float) -> float:
    """sqrt(pi)/2 - y + sqrt(pi) y^2 + y^3 exp(-y^2) (Ei(y^2) - pi erfi(y))."""
    return (
        0.5 * math.sqrt(math.pi)
        - y
        + math.sqrt(math.pi) * y**2
        + y**3 * math.exp(-(y**2)) * (special_eval("expint_Ei", y**2) - math.pi * special_eval("erfi", y))
    )


def _gcz_long_small(p: _Inputs) -> Terms:
    prefactor = -p.hbar * p.c * p.d / p.sigma**3 * math.sqrt(2.0) * p.r_r * p.lam2 / (3.0 * math.pi**2)
    return {TOTAL: prefactor * ground_casimir_bracket(p.y)}


def _gcz_long_large_small_v(p: _Inputs) -> Terms:
    return {TOTAL: -p.hbar * p.c**2 / (p.omega * p.d**3) * p.r_r * p.lam2 / (8.0 * math.pi**2)}


def _gcz_long_large_high_v(p: _Inputs) -> Terms:
    return {TOTAL: -p.hbar * p.c**2 / (p.omega * p.d**3) * p.r_r * p.lam2 / (16.0 * math.pi**2)}


def pointlike_bracket(x: float) -> float:
    """(pi - 2 Si(x))(x sin x + cos x) - 2 Ci(x)(x cos x - sin x)."""
    si = math.pi - 2.0 * special_eval("Si", x)
    return si * (x * math.sin(x) + math.cos(x)) - 2.0 * special_eval("Ci", x) * (x * math.cos(x) - math.sin(x))


def _gcz_long_pointlike(p: _Inputs) -> Terms:
    prefactor = -p.hbar * p.c / p.d**2 * p.r_r * p.lam2 / (16.0 * math.pi**2)
    return {TOTAL: prefactor * pointlike_bracket(p.phase)}


def pointlike_near_plate(params: DetectorParams, d: float, R: complex, scales: PhysicalScales = NATURAL_SCALES) -> float:
    """Short-distance limit -hbar c lambda^2 R_R / (16 pi d^2) of the pointlike Casimir force."""
    return -scales.hbar * scales.c / d**2 * complex(R).real * params.coupling_lambda**2 / (16.0 * math.pi)


# excited state, friction


def _efx_short_small(p: _Inputs) -> Terms:
    prefactor = -p.gv * p.hbar * p.c**2 / p.sigma**3 * p.lam2 / (2.0 * math.pi**2)
    return {
        LINEAR: prefactor * p.r_r * p.dtau * math.sqrt(math.pi / 2.0),
        QUADRATIC: prefactor * p.r_i * p.c * p.dtau**2 / p.sigma
        * (1.0 - math.sqrt(math.pi / 2.0) * p.omega * p.sigma / (2.0 * p.c)),
    }


def _efx_short_large(p: _Inputs) -> Terms:
    prefactor = -p.gv * p.hbar * p.c**2 / p.sigma**3 * p.lam2 / (4.0 * math.pi**2)
    return {
        LINEAR: prefactor * p.r_r * p.dtau * math.sqrt(2.0 * math.pi) * math.exp(-2.0 * p.d**2 / p.sigma**2),
        QUADRATIC: -prefactor * p.r_i * p.c * p.sigma**3 / (4.0 * p.d**4) * p.dtau**2 / 2.0,
    }


def _efx_long_small_delta(p: _Inputs) -> Terms:
    return {TOTAL: -p.gv * p.hbar * p.omega**2 / p.c * p.lam2 / (2.0 * math.pi) * p.r_r * p.weight}


def _efx_long_small_pv(p: _Inputs) -> Terms:
    return {TOTAL: p.gv * p.hbar * p.omega**2 / p.c * p.lam2 / (2.0 * math.pi) * p.r_i * meijer_reduced("friction", p.y)}


def _efx_long_large_pv(p: _Inputs) -> Terms:
    value = -p.gv * p.hbar * p.omega / p.d * p.lam2 / (4.0 * math.pi) * p.r_i * p.weight * math.cos(p.phase)
    return {TOTAL: value}


def _efx_long_large_delta(p: _Inputs) -> Terms:
    value = -p.gv * p.hbar * p.omega / p.d * p.lam2 / (4.0 * math.pi) * p.r_r * p.weight * math.sin(p.phase)
    return {TOTAL: value}


# excited state, Casimir


def _ecz_short_small(p: _Inputs) -> Terms:
    prefactor = p.hbar * p.c**2 * p.d / p.sigma**4 * p.lam2 / (3.0 * math.pi**2)
    return {
        LINEAR: prefactor * 2.0 * p.r_i * p.dtau,
        QUADRATIC: -prefactor * p.r_r * p.c * p.dtau**2 / p.sigma
        * (0.75 * math.sqrt(2.0 * math.pi) - p.sigma * p.omega / p.c),
    }


def _ecz_short_large(p: _Inputs) -> Terms:
    prefactor = -p.hbar * p.c**2 / p.d**3 * 7.0 * p.lam2 / (64.0 * math.pi**2)
    return {
        LINEAR: prefactor * p.r_i * p.dtau,
        QUADRATIC: prefactor * p.r_r * p.omega * p.dtau**2 / 2.0,
    }


def _ecz_long_small_delta(p: _Inputs) -> Terms:
    return {TOTAL: p.hbar * p.omega**3 * p.d / p.c * p.lam2 / (3.0 * math.pi) * p.r_i * p.weight}


def _ecz_long_small_pv(p: _Inputs) -> Terms:
    value = p.hbar * p.omega**3 * p.d / p.c**2 * p.lam2 / (3.0 * math.pi) * p.r_r * meijer_reduced("casimir", p.y)
    return {TOTAL: value}


def _ecz_long_large_delta(p: _Inputs) -> Terms:
    value = -p.hbar * p.omega / p.d * p.r_i * p.lam2 / (4.0 * math.pi) * p.weight * math.cos(p.phase)
    return {TOTAL: value}


def _ecz_long_large_pv(p: _Inputs) -> Terms:
    value = -p.hbar * p.omega / p.d * p.r_r * p.lam2 / (4.0 * math.pi) * p.weight * math.sin(p.phase)
    return {TOTAL: value}


_FORMULAS: dict[tuple[str, ...], Formula] = {
    ("ground", "friction_x", "short", "free", "any", "total"): _free_short,
    ("ground", "friction_x", "long", "free", "any", "total"): _free_ground_long,
    ("excited", "friction_x", "short", "free", "any", "total"): _free_short,
    ("excited", "friction_x", "long", "free", "any", "total"): _free_excited_long,
    ("excited", "friction_x", "long", "free", "any", "delta"): _free_excited_delta,
    ("ground", "friction_x", "short", "small_d", "any", "total"): _gfx_short_small,
    ("ground", "friction_x", "short", "large_d", "any", "total"): _gfx_short_large,
    ("ground", "friction_x", "long", "small_d", "any", "total"): _gfx_long_small,
    ("ground", "friction_x", "long", "large_d", "any", "total"): _gfx_long_large,
    ("ground", "casimir_z", "short", "small_d", "any", "total"): _gcz_short_small,
    ("ground", "casimir_z", "short", "large_d", "any", "total"): _gcz_short_large,
    ("ground", "casimir_z", "long", "small_d", "any", "total"): _gcz_long_small,
    ("ground", "casimir_z", "long", "large_d", "small_v", "total"): _gcz_long_large_small_v,
    ("ground", "casimir_z", "long", "large_d", "high_v", "total"): _gcz_long_large_high_v,
    ("ground", "casimir_z", "long", "pointlike", "small_v", "total"): _gcz_long_pointlike,
    ("excited", "friction_x", "short", "small_d", "any", "total"): _efx_short_small,
    ("excited", "friction_x", "short", "large_d", "any", "total"): _efx_short_large,
    ("excited", "friction_x", "long", "small_d", "any", "pv"): _efx_long_small_pv,
    ("excited", "friction_x", "long", "small_d", "any", "delta"): _efx_long_small_delta,
    ("excited", "friction_x", "long", "large_d", "any", "pv"): _efx_long_large_pv,
    ("excited", "friction_x", "long", "large_d", "any", "delta"): _efx_long_large_delta,
    ("excited", "casimir_z", "short", "small_d", "any", "total"): _ecz_short_small,
    ("excited", "casimir_z", "short", "large_d", "any", "total"): _ecz_short_large,
    ("excited", "casimir_z", "long", "small_d", "any", "pv"): _ecz_long_small_pv,
    ("excited", "casimir_z", "long", "small_d", "any", "delta"): _ecz_long_small_delta,
    ("excited", "casimir_z", "long", "large_d", "any", "pv"): _ecz_long_large_pv,
    ("excited", "casimir_z", "long", "large_d", "any", "delta"): _ecz_long_large_delta,
}


def all_keys() -> list[RegimeKey]:
    return [RegimeKey(*key) for key in _FORMULAS]


def keys_for(boundary_is_plate: bool, time: str | None = None) -> list[RegimeKey]:
    """Catalogue keys that describe a free-space or a plate configuration."""
    keys = [k for k in all_keys() if (k.distance != "free") == boundary_is_plate]
    return [k for k in keys if time is None or k.time == time]


def _regime_violations(key: RegimeKey, p: _Inputs, beta: float) -> list[str]:
    issues = []
    ratio = p.d / p.sigma if p.sigma > 0 else math.inf
    if key.distance == "small_d" and ratio > SMALL_D_MAX:
        issues.append(f"d/sigma={ratio:.3g} > {SMALL_D_MAX}")
    if key.distance == "large_d" and ratio < LARGE_D_MIN:
        issues.append(f"d/sigma={ratio:.3g} < {LARGE_D_MIN}")
    if key.time == "short" and p.omega * p.dtau > SHORT_T_MAX:
        issues.append(f"Omega*dtau={p.omega * p.dtau:.3g} > {SHORT_T_MAX}")
    if key.time == "long" and key.distance == "free" and p.omega * p.dtau < LONG_T_MIN:
        issues.append(f"Omega*dtau={p.omega * p.dtau:.3g} < {LONG_T_MIN}")
    if key.velocity == "small_v" and abs(beta) > SMALL_V_MAX:
        issues.append(f"|v|/c={abs(beta):.3g} > {SMALL_V_MAX}")
    if key.velocity == "high_v" and abs(beta) < HIGH_V_MIN:
        issues.append(f"|v|/c={abs(beta):.3g} < {HIGH_V_MIN}")
    return issues


def _inputs(
    key: RegimeKey,
    params: DetectorParams,
    v: float,
    d: float | None,
    R: complex,
    window: SwitchingWindow | None,
    scales: PhysicalScales,
) -> tuple[_Inputs, float]:
    if key.distance != "free" and not (d is not None and d > 0):
        raise ValueError(f"{key.label} needs a plate distance d > 0")
    if key.distance != "pointlike" and params.smearing_sigma <= 0:
        raise ValueError(f"{key.label} needs a finite smearing width")
    if key.distance in ("pointlike", "large_d") or key.time == "long":
        if params.gap_omega <= 0:
            raise ValueError(f"{key.label} needs a gap Omega > 0")
    if (key.time == "short" or key.distance == "free") and window is None:
        raise ValueError(f"{key.label} needs a switching window")
    beta = v / scales.c
    gamma = lorentz_factor(beta)
    R = complex(R)
    inputs = _Inputs(
        hbar=scales.hbar,
        c=scales.c,
        lam2=params.coupling_lambda**2,
        omega=params.gap_omega,
        sigma=params.smearing_sigma,
        dtau=window.delta_tau if window is not None else math.inf,
        d=d if d is not None else math.inf,
        r_r=R.real,
        r_i=R.imag,
        gv=gamma * beta,
    )
    return inputs, beta


def asymptote_terms(
    key: RegimeKey,
    params: DetectorParams,
    v: float,
    d: float | None = None,
    R: complex = 1.0 + 0j,
    window: SwitchingWindow | None = None,
    scales: PhysicalScales = NATURAL_SCALES,
    warn: bool = True,
) -> dict[str, float]:
    """Named terms of a closed form: `linear`/`quadratic` in dtau for short-time plate keys, else `total`."""
    formula = _FORMULAS.get(key.as_tuple())
    if formula is None:
        raise UnknownRegime(f"no closed form for {key.as_tuple()}")
    inputs, beta = _inputs(key, params, v, d, R, window, scales)
    issues = _regime_violations(key, inputs, beta)
    if issues and warn:
        emit("asymptote_outside_regime", {"key": key.label, "issues": issues}, level="WARNING")
    return formula(inputs)


def asymptote(
    key: RegimeKey,
    params: DetectorParams,
    v: float,
    d: float | None = None,
    R: complex = 1.0 + 0j,
    window: SwitchingWindow | None = None,
    scales: PhysicalScales = NATURAL_SCALES,
    warn: bool = True,
) -> float:
    """Closed-form value of a catalogue entry, as a force in the units of `scales`."""
    return sum(asymptote_terms(key, params, v, d, R, window, scales, warn).values())
