"""Numeric integration engines.

Every integrand is called with a 1-D numpy array of abscissae and must return an
array of the same shape (real or complex). Sphere integrands take two broadcast
arrays (theta, phi) where theta is the polar angle from the caller's chosen axis.
"""

from __future__ import annotations

from dataclasses import dataclass
import math
from typing import Callable, Sequence

import numpy as np
from numpy.polynomial.legendre import leggauss

from src.core.errors import NonFiniteIntegrand, NonPositiveShell, PoleOutsideDomain, ToleranceNotMet
from src.core.events import emit
from src.core.params import lorentz_factor

Integrand = Callable[[np.ndarray], np.ndarray]
SphereIntegrand = Callable[[np.ndarray, np.ndarray], np.ndarray]

MAX_INITIAL_PANELS = 10_000
MIN_PANEL_FRACTION = 1e-13
EPS = np.finfo(float).eps
TINY = np.finfo(float).tiny

SPHERE_START = 16
SPHERE_MAX_NODES = 1024

# Gauss-Kronrod 7/15 abscissae and weights on [-1, 1] (positive half, centre last).
_XGK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0,
])
_WGK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
_WG_HALF = np.array([
    0.0,
    0.129484966168869693270611432679082,
    0.0,
    0.279705391489276667901467771423780,
    0.0,
    0.381830050505118944950369775488975,
    0.0,
    0.417959183673469387755102040816327,
])

NODES = np.concatenate([-_XGK[:-1], _XGK[::-1]])
KRONROD_WEIGHTS = np.concatenate([_WGK[:-1], _WGK[::-1]])
GAUSS_WEIGHTS = np.concatenate([_WG_HALF[:-1], _WG_HALF[::-1]])


@dataclass(frozen=True)
class ToleranceSpec:
    """Relative and absolute targets plus an evaluation budget."""

    rel_tol: float = 1e-10
    abs_tol: float = 0.0
    max_evals: int = 2_000_000

    def __post_init__(self) -> None:
        if not self.rel_tol > 0:
            raise ValueError(f"rel_tol must be > 0, got {self.rel_tol}")
        if self.abs_tol < 0:
            raise ValueError(f"abs_tol must be >= 0, got {self.abs_tol}")
        if self.max_evals < 15:
            raise ValueError(f"max_evals must allow one panel, got {self.max_evals}")


@dataclass(frozen=True)
class QuadratureResult:
    """Integral value, error estimate, number of integrand evaluations and convergence flag."""

    value: float | complex
    error_estimate: float
    evaluations: int
    converged: bool = True

    def __add__(self, other: QuadratureResult) -> QuadratureResult:
        return QuadratureResult(
            value=self.value + other.value,
            error_estimate=self.error_estimate + other.error_estimate,
            evaluations=self.evaluations + other.evaluations,
            converged=self.converged and other.converged,
        )

    def scaled(self, factor: float | complex) -> QuadratureResult:
        return QuadratureResult(
            value=self.value * factor,
            error_estimate=self.error_estimate * abs(factor),
            evaluations=self.evaluations,
            converged=self.converged,
        )

    def require(self, context: str) -> QuadratureResult:
        """Raise ToleranceNotMet when the result did not converge."""
        if not self.converged:
            raise ToleranceNotMet(
                f"{context}: tolerance not met (value={self.value!r}, "
                f"error={self.error_estimate:.3g}, evaluations={self.evaluations})"
            )
        return self


ZERO_RESULT = QuadratureResult(value=0.0, error_estimate=0.0, evaluations=1)


def _evaluate(func: Integrand, points: np.ndarray) -> np.ndarray:
    values = np.asarray(func(points.ravel()))
    if values.shape != points.ravel().shape:
        values = np.broadcast_to(values, points.ravel().shape)
    if not np.all(np.isfinite(values)):
        bad = points.ravel()[~np.isfinite(values)]
        raise NonFiniteIntegrand(f"integrand is not finite at {bad[:5].tolist()}")
    return values.reshape(points.shape)


def _gk15(func: Integrand, lo: np.ndarray, hi: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Kronrod estimate, error and integral of |f| per panel, with the QUADPACK error heuristic."""
    centre = 0.5 * (lo + hi)
    half = 0.5 * (hi - lo)
    points = centre[:, None] + half[:, None] * NODES[None, :]
    fx = _evaluate(func, points)
    kronrod = (fx @ KRONROD_WEIGHTS) * half
    gauss = (fx @ GAUSS_WEIGHTS) * half
    mean = (fx @ KRONROD_WEIGHTS) * 0.5
    resabs = np.abs(half) * (np.abs(fx) @ KRONROD_WEIGHTS)
    resasc = np.abs(half) * (np.abs(fx - mean[:, None]) @ KRONROD_WEIGHTS)
    err = np.abs(kronrod - gauss)
    scale = (resasc != 0) & (err != 0)
    err = np.where(scale, resasc * np.minimum(1.0, (200.0 * err / np.where(scale, resasc, 1.0)) ** 1.5), err)
    floor = resabs > TINY / (50.0 * EPS)
    err = np.where(floor, np.maximum(50.0 * EPS * resabs, err), err)
    return kronrod, err, resabs


def _initial_edges(a: float, b: float, breakpoints: Sequence[float], panel_width: float | None) -> np.ndarray:
    cuts = sorted({a, b, *(p for p in breakpoints if a < p < b)})
    edges = [cuts[0]]
    for left, right in zip(cuts[:-1], cuts[1:]):
        count = 1
        if panel_width is not None and panel_width > 0:
            count = max(1, math.ceil((right - left) / panel_width))
        edges.extend(np.linspace(left, right, count + 1)[1:].tolist())
    edges_arr = np.asarray(edges)
    if edges_arr.size - 1 > MAX_INITIAL_PANELS:
        stride = math.ceil((edges_arr.size - 1) / MAX_INITIAL_PANELS)
        kept = edges_arr[::stride]
        edges_arr = np.union1d(kept, np.asarray(cuts))
    return edges_arr


def _adaptive(
    func: Integrand,
    edges: np.ndarray,
    tol: ToleranceSpec,
    context: str,
) -> QuadratureResult:
    lo, hi = edges[:-1], edges[1:]
    values, errors, magnitudes = _gk15(func, lo, hi)
    evaluations = 15 * lo.size
    span = float(edges[-1] - edges[0])
    while True:
        total = values.sum()
        total_err = float(errors.sum())
        # cancelling integrands are resolved relative to the integral of |f|
        target = max(tol.abs_tol, tol.rel_tol * abs(total), 100.0 * EPS * float(magnitudes.sum()))
        if total_err <= target:
            return QuadratureResult(total.item(), total_err, evaluations, True)
        candidates = np.flatnonzero(
            (errors > target / errors.size) & ((hi - lo) > MIN_PANEL_FRACTION * span)
        )
        budget = (tol.max_evals - evaluations) // 30
        if candidates.size == 0 or budget <= 0:
            emit(
                "quadrature_unconverged",
                {"context": context, "value": str(total.item()),
                 "error": total_err, "target": target, "evaluations": evaluations},
                level="WARNING",
            )
            return QuadratureResult(total.item(), total_err, evaluations, False)
        if candidates.size > budget:
            candidates = candidates[np.argsort(errors[candidates], kind="stable")[::-1][:budget]]
            candidates.sort()
        mid = 0.5 * (lo[candidates] + hi[candidates])
        new_lo = np.concatenate([lo[candidates], mid])
        new_hi = np.concatenate([mid, hi[candidates]])
        new_values, new_errors, new_magnitudes = _gk15(func, new_lo, new_hi)
        evaluations += 15 * new_lo.size
        keep = np.ones(lo.size, dtype=bool)
        keep[candidates] = False
        lo = np.concatenate([lo[keep], new_lo])
        hi = np.concatenate([hi[keep], new_hi])
        values = np.concatenate([values[keep], new_values])
        errors = np.concatenate([errors[keep], new_errors])
        magnitudes = np.concatenate([magnitudes[keep], new_magnitudes])
        order = np.argsort(lo, kind="stable")
        lo, hi = lo[order], hi[order]
        values, errors, magnitudes = values[order], errors[order], magnitudes[order]


def integrate_1d(
    f: Integrand,
    a: float,
    b: float,
    tol: ToleranceSpec | None = None,
    breakpoints: Sequence[float] = (),
    panel_width: float | None = None,
    context: str = "integrate_1d",
) -> QuadratureResult:
    """Adaptive Gauss-Kronrod quadrature of f on [a, b], b possibly +inf.

    `panel_width` seeds equal panels on each finite stretch between breakpoints;
    oscillatory integrands should pass half their period. A semi-infinite tail
    beyond the last breakpoint is mapped by s = c + t/(1 - t).
    """
    tol = tol or ToleranceSpec()
    if math.isnan(a) or math.isnan(b) or math.isinf(a):
        raise ValueError(f"invalid interval [{a}, {b}]")
    if b == a:
        return ZERO_RESULT
    if b < a:
        return integrate_1d(f, b, a, tol, breakpoints, panel_width, context).scaled(-1.0)

    if math.isfinite(b):
        return _adaptive(f, _initial_edges(a, b, breakpoints, panel_width), tol, context)

    inner = [p for p in breakpoints if p > a and math.isfinite(p)]
    c = max(inner) if inner else a

    def mapped(u: np.ndarray) -> np.ndarray:
        tail = u >= c
        w = np.where(tail, u - c, 0.0)
        s = np.where(tail, c + w / (1.0 - w), u)
        jac = np.where(tail, 1.0 / (1.0 - w) ** 2, 1.0)
        return np.asarray(f(s)) * jac

    head = _initial_edges(a, c, inner, panel_width) if c > a else np.array([a])
    edges = np.concatenate([head, [c + 1.0]])
    return _adaptive(mapped, edges, tol, context)


def integrate_pv(
    f: Integrand,
    pole: float,
    a: float,
    b: float,
    tol: ToleranceSpec | None = None,
    breakpoints: Sequence[float] = (),
    panel_width: float | None = None,
    context: str = "integrate_pv",
) -> QuadratureResult:
    """Cauchy principal value of the integral of f(s)/(s - pole) over [a, b].

    Subtracts f(pole) so the remaining integrand is smooth; on a semi-infinite
    interval the subtraction runs over the window [a, 2*pole - a] and the tail
    beyond it is integrated directly.
    """
    tol = tol or ToleranceSpec()
    if not (a < pole < b):
        raise PoleOutsideDomain(f"pole {pole} is not inside ({a}, {b})")
    f_pole = np.asarray(f(np.array([pole]))).reshape(-1)[0].item()

    def subtracted(s: np.ndarray) -> np.ndarray:
        return (np.asarray(f(s)) - f_pole) / (s - pole)

    upper = b if math.isfinite(b) else 2.0 * pole - a
    window_breaks = [pole, *(p for p in breakpoints if a < p < upper)]
    result = integrate_1d(subtracted, a, upper, tol, window_breaks, panel_width, context)
    result = QuadratureResult(
        result.value + f_pole * math.log((upper - pole) / (pole - a)),
        result.error_estimate,
        result.evaluations + 1,
        result.converged,
    )
    if math.isfinite(b):
        return result

    def tail(s: np.ndarray) -> np.ndarray:
        return np.asarray(f(s)) / (s - pole)

    tail_breaks = [p for p in breakpoints if p > upper]
    return result + integrate_1d(tail, upper, math.inf, tol, tail_breaks, panel_width, context)


def _sphere_rule(g: SphereIntegrand, n_theta: int, n_phi: int) -> tuple[float | complex, float]:
    x, w = leggauss(n_theta)
    theta = np.arccos(x)
    phi = 2.0 * np.pi * np.arange(n_phi) / n_phi
    values = np.asarray(g(theta[:, None], phi[None, :]))
    values = np.broadcast_to(values, (n_theta, n_phi))
    if not np.all(np.isfinite(values)):
        raise NonFiniteIntegrand("sphere integrand is not finite")
    step = 2.0 * np.pi / n_phi
    return (w @ values.sum(axis=1)) * step, float(w @ np.abs(values).sum(axis=1)) * step


def integrate_sphere(
    g: SphereIntegrand,
    tol: ToleranceSpec | None = None,
    context: str = "integrate_sphere",
) -> QuadratureResult:
    """Gauss-Legendre in cos(theta) times the trapezoid rule in phi, doubled until stable."""
    tol = tol or ToleranceSpec()
    n = SPHERE_START
    previous, _ = _sphere_rule(g, n, n)
    evaluations = n * n
    while True:
        n *= 2
        current, magnitude = _sphere_rule(g, n, n)
        evaluations += n * n
        err = abs(current - previous)
        target = max(tol.abs_tol, tol.rel_tol * abs(current), 100.0 * EPS * magnitude)
        if err <= target:
            return QuadratureResult(np.asarray(current).item(), float(err), evaluations, True)
        if n >= SPHERE_MAX_NODES or evaluations + 4 * n * n > tol.max_evals:
            emit(
                "quadrature_unconverged",
                {"context": context, "value": str(np.asarray(current).item()), "error": float(err), "nodes": n},
                level="WARNING",
            )
            return QuadratureResult(np.asarray(current).item(), float(err), evaluations, False)
        previous = current


def onshell_surface_integral(
    g: SphereIntegrand,
    s_star: float,
    tol: ToleranceSpec | None = None,
    velocity: float = 0.0,
    context: str = "onshell_surface_integral",
) -> QuadratureResult:
    """Integrate g over the lab momenta with detector-frame frequency s = s_star.

    Equivalent to the volume integral of g(k) * delta(s(k) - s_star) d^3k with
    s = gamma*|k|*(1 - v*cos(theta)), theta the lab polar angle from the velocity
    axis. The surface is parametrised by detector-frame angles, where its measure
    is s_star^2 * gamma * (1 + v*cos(theta')).
    """
    if not s_star > 0:
        raise NonPositiveShell(f"resonance shell at s = {s_star} is not reachable")
    gamma = lorentz_factor(velocity)

    def on_shell(theta_rest: np.ndarray, phi: np.ndarray) -> np.ndarray:
        c_rest = np.cos(theta_rest)
        c_lab = np.clip((c_rest + velocity) / (1.0 + velocity * c_rest), -1.0, 1.0)
        weight = s_star**2 * gamma * (1.0 + velocity * c_rest)
        return weight * g(np.arccos(c_lab), phi)

    return integrate_sphere(on_shell, tol, context)
