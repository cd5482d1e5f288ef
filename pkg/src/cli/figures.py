"""Figure data: numeric curves next to every closed-form limit drawn with them.

All curves are computed at sigma = c = hbar = lambda = 1. Free-space curves are
friction forces in units of Omega^2 gamma v / (2 pi^2); plate curves are ratios
to a reference force named in the file metadata.
"""

from __future__ import annotations

from dataclasses import dataclass
import math
from pathlib import Path
from typing import Callable

import numpy as np

from src.asymptotics.catalogue import RegimeKey, asymptote_terms, pointlike_near_plate
from src.cli.output import Table, write_text
from src.cli.sweep import ordered_map
from src.core.errors import UnknownFigure
from src.core.events import emit
from src.core.params import DetectorParams, DetectorState, FreeSpace, Plate, SwitchingWindow, to_dimensionless
from src.force.components import FINITE_TIME, FRICTION, LONG_TIME, ForceComponents, normalization_divisor
from src.force.free import force_free
from src.force.plate import force_plate
from src.numerics.quadrature import ToleranceSpec

FIGURE_TOLERANCE = ToleranceSpec(rel_tol=1e-8, abs_tol=1e-15)

FREE_VELOCITY = 0.5
PLATE_VELOCITY = 0.999
SHORT_OMEGA_DTAU = 1e-3
REFERENCE_DISTANCE = 1.0
EQUAL_REFLECTION = complex(1.0, 1.0) / math.sqrt(2.0)

FIG1_GRID = np.linspace(0.02, 20.0, 250)
FIG2_GRID = np.geomspace(1e-3, 1e2, 151)
DISTANCE_GRID = np.geomspace(1e-2, 1e2, 61)

GROUND = DetectorState(excited_pop=0.0)
EXCITED = DetectorState(excited_pop=1.0)

Build = Callable[[int, ToleranceSpec], list[tuple[str, Table]]]


@dataclass(frozen=True)
class FigureSpec:
    """A reproducible figure: its caption parameters and how to build its files."""

    figure_id: str
    caption: str
    build: Build


def _params(sigma_omega: float) -> DetectorParams:
    return DetectorParams(gap_omega=sigma_omega, smearing_sigma=1.0)


def _state(name: str) -> DetectorState:
    return GROUND if name == "ground" else EXCITED


# free space


def _free_time_table(state: str, sigma_omega: float, grid: np.ndarray, threads: int, tol: ToleranceSpec) -> Table:
    params = _params(sigma_omega)
    divisor = normalization_divisor(
        FRICTION, to_dimensionless(params, FreeSpace(), FREE_VELOCITY, SwitchingWindow(0.0))
    )
    short = RegimeKey(state, "friction_x", "short", "free")
    long = RegimeKey(state, "friction_x", "long", "free")
    steady = RegimeKey(state, "friction_x", "long", "free", contribution="delta") if state == "excited" else None

    def limit(key: RegimeKey, window: SwitchingWindow) -> float:
        return sum(asymptote_terms(key, params, FREE_VELOCITY, window=window, warn=False).values()) / divisor

    def point(t_gap: float) -> list[float]:
        window = SwitchingWindow(t_gap / sigma_omega)
        force = force_free(params, _state(state), FREE_VELOCITY, window, tol=tol)
        row = [t_gap, force.x / divisor, limit(short, window), limit(long, window)]
        if steady is not None:
            row.append(limit(steady, window))
        return row

    header = ["omega_delta_tau", "F_numeric", "F_short_asymptote", "F_long_asymptote"]
    if steady is not None:
        header.append("F_long_steady")
    metadata = {
        "state": state,
        "sigma_omega": sigma_omega,
        "v": FREE_VELOCITY,
        "normalization": "F_x / (Omega^2 gamma v / (2 pi^2))",
    }
    return Table(tuple(header), ordered_map(point, [float(t) for t in grid], threads), metadata)


def _fig1(threads: int, tol: ToleranceSpec) -> list[tuple[str, Table]]:
    return [
        ("fig1_upper", _free_time_table("ground", 1.0, FIG1_GRID, threads, tol)),
        ("fig1_lower", _free_time_table("ground", 5.0, FIG1_GRID, threads, tol)),
    ]


def _fig2(sigma_omega: float, name: str) -> Build:
    def build(threads: int, tol: ToleranceSpec) -> list[tuple[str, Table]]:
        return [(name, _free_time_table("excited", sigma_omega, FIG2_GRID, threads, tol))]

    return build


# plate


@dataclass(frozen=True)
class _PlateCurve:
    state: str
    component: str
    time: str
    contribution: str = "total"
    velocity: float = PLATE_VELOCITY
    large_velocity: str = "any"
    reference: str = "formula"
    pointlike: bool = False


def _numeric(force: ForceComponents, curve: _PlateCurve) -> float:
    if curve.contribution != "total":
        force = force.parts[curve.contribution]
    return force.x if curve.component == "friction_x" else force.z


def _plate_distance_table(curve: _PlateCurve, threads: int, tol: ToleranceSpec) -> Table:
    params = _params(1.0)
    R = EQUAL_REFLECTION
    regime = FINITE_TIME if curve.time == "short" else LONG_TIME
    window = SwitchingWindow(SHORT_OMEGA_DTAU if curve.time == "short" else 0.0)
    keys = {
        "small_d": RegimeKey(curve.state, curve.component, curve.time, "small_d", "any", curve.contribution),
        "large_d": RegimeKey(
            curve.state, curve.component, curve.time, "large_d", curve.large_velocity, curve.contribution
        ),
    }
    pointlike_key = RegimeKey("ground", "casimir_z", "long", "pointlike", "small_v") if curve.pointlike else None

    def numeric(d: float) -> float:
        force = force_plate(params, _state(curve.state), curve.velocity, Plate(d, R), window, regime, tol=tol)
        return _numeric(force, curve)

    def terms(key: RegimeKey, d: float) -> dict[str, float]:
        return asymptote_terms(key, params, curve.velocity, d, R, window, warn=False)

    if curve.reference == "numeric":
        reference = numeric(REFERENCE_DISTANCE)
        reference_label = "numeric force at d = sigma"
    else:
        reference = sum(terms(keys["small_d"], REFERENCE_DISTANCE).values())
        reference_label = "small-distance closed form at d = sigma"
    if reference == 0:
        raise ValueError(f"reference force vanishes for {curve}")

    def point(d: float) -> list[float]:
        row = [d, numeric(d) / reference]
        for name, key in keys.items():
            parts = terms(key, d)
            row.append(sum(parts.values()) / reference)
            if curve.time == "short":
                row += [parts["linear"] / reference, parts["quadratic"] / reference]
        if pointlike_key is not None:
            row.append(sum(terms(pointlike_key, d).values()) / reference)
            row.append(pointlike_near_plate(params, d, R) / reference)
        return row

    header = ["d_over_sigma", "ratio_numeric"]
    for name in keys:
        header.append(name)
        if curve.time == "short":
            header += [f"{name}_linear", f"{name}_quadratic"]
    if pointlike_key is not None:
        header += ["pointlike", "pointlike_near_plate"]
    metadata = {
        "state": curve.state,
        "component": curve.component,
        "contribution": curve.contribution,
        "regime": regime,
        "sigma_omega": 1.0,
        "v": curve.velocity,
        "omega_delta_tau": SHORT_OMEGA_DTAU if curve.time == "short" else None,
        "reflection": [R.real, R.imag],
        "reference": reference_label,
        "reference_value": reference,
    }
    return Table(tuple(header), ordered_map(point, [float(d) for d in DISTANCE_GRID], threads), metadata)


def _plate(name: str, curve: _PlateCurve) -> Build:
    def build(threads: int, tol: ToleranceSpec) -> list[tuple[str, Table]]:
        return [(name, _plate_distance_table(curve, threads, tol))]

    return build


FIGURES: dict[str, FigureSpec] = {
    spec.figure_id: spec
    for spec in (
        FigureSpec("fig1", "ground-state friction vs Omega*dtau at sigma*Omega = 1 (upper) and 5 (lower)", _fig1),
        FigureSpec("fig2a", "excited-state friction vs Omega*dtau at sigma*Omega = 0.01", _fig2(0.01, "fig2a")),
        FigureSpec("fig2b", "excited-state friction vs Omega*dtau at sigma*Omega = 0.1", _fig2(0.1, "fig2b")),
        FigureSpec("fig2c", "excited-state friction vs Omega*dtau at sigma*Omega = 1", _fig2(1.0, "fig2c")),
        FigureSpec("fig2d", "excited-state friction vs Omega*dtau at sigma*Omega = 5", _fig2(5.0, "fig2d")),
        FigureSpec(
            "fig3",
            "ground-state friction ratio to contact, short time",
            _plate("fig3", _PlateCurve("ground", "friction_x", "short")),
        ),
        FigureSpec(
            "fig4",
            "ground-state friction ratio to contact, long time",
            _plate("fig4", _PlateCurve("ground", "friction_x", "long")),
        ),
        FigureSpec(
            "fig5",
            "ground-state Casimir ratio to d = sigma, short time",
            _plate("fig5", _PlateCurve("ground", "casimir_z", "short", reference="numeric")),
        ),
        FigureSpec(
            "fig6a",
            "ground-state Casimir ratio to d = sigma, long time, v = 0",
            _plate(
                "fig6a",
                _PlateCurve(
                    "ground", "casimir_z", "long", velocity=0.0, large_velocity="small_v",
                    reference="numeric", pointlike=True,
                ),
            ),
        ),
        FigureSpec(
            "fig6b",
            "ground-state Casimir ratio to d = sigma, long time, v = 0.999c",
            _plate(
                "fig6b",
                _PlateCurve(
                    "ground", "casimir_z", "long", large_velocity="high_v", reference="numeric", pointlike=True
                ),
            ),
        ),
        FigureSpec(
            "fig7",
            "excited-state friction ratio to contact, short time",
            _plate("fig7", _PlateCurve("excited", "friction_x", "short")),
        ),
        FigureSpec(
            "fig8",
            "excited-state friction on-shell part ratio to contact, long time",
            _plate("fig8", _PlateCurve("excited", "friction_x", "long", contribution="delta")),
        ),
        FigureSpec(
            "fig9",
            "excited-state friction principal-value part ratio to contact, long time",
            _plate("fig9", _PlateCurve("excited", "friction_x", "long", contribution="pv")),
        ),
        FigureSpec(
            "fig10a",
            "excited-state Casimir ratio to d = sigma, short time",
            _plate("fig10a", _PlateCurve("excited", "casimir_z", "short", reference="numeric")),
        ),
        FigureSpec(
            "fig10b",
            "excited-state Casimir on-shell part ratio to its small-distance form at d = sigma",
            _plate("fig10b", _PlateCurve("excited", "casimir_z", "long", contribution="delta")),
        ),
        FigureSpec(
            "fig10c",
            "excited-state Casimir principal-value part ratio to its small-distance form at d = sigma",
            _plate("fig10c", _PlateCurve("excited", "casimir_z", "long", contribution="pv")),
        ),
    )
}


def figure_tables(figure_id: str, threads: int = 1, tol: ToleranceSpec | None = None) -> list[tuple[str, Table]]:
    """Named tables of one figure, with the caption recorded in each table's metadata."""
    spec = FIGURES.get(figure_id)
    if spec is None:
        raise UnknownFigure(f"Unknown figure '{figure_id}', expected one of {sorted(FIGURES)}")
    tables = []
    for name, table in spec.build(threads, tol or FIGURE_TOLERANCE):
        metadata = {"figure": figure_id, "caption": spec.caption, **table.metadata}
        tables.append((name, Table(table.header, table.rows, metadata)))
    return tables


def cmd_figure(figure_id: str, out_dir: str, threads: int = 1, tol: ToleranceSpec | None = None) -> list[str]:
    """Write `<out_dir>/<name>.csv` for each table of a figure; returns the paths."""
    paths = []
    for name, table in figure_tables(figure_id, threads, tol):
        path = str(Path(out_dir) / f"{name}.csv")
        write_text(path, table.to_csv())
        emit("figure_written", {"figure": figure_id, "path": path, "rows": len(table.rows)})
        paths.append(path)
    return paths


__all__ = ["FIGURES", "FigureSpec", "cmd_figure", "figure_tables"]
