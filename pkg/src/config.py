"""Configuration loader for udwf runs.

A run file holds physical inputs in exactly one style: `units: si` gives
gap_omega [rad/s], smearing_sigma [m], velocity [m/s], distance [m] and
delta_tau [s]; `units: dimensionless` gives sigma_omega, beta_v,
d_over_sigma and omega_delta_tau, evaluated at sigma = c = hbar = 1.
"""

from __future__ import annotations

import copy
from dataclasses import dataclass, field
import math
import os
from typing import Any

from dotenv import load_dotenv
import numpy as np
import yaml

from src.core.events import LEVELS, emit
from src.core.params import (
    NATURAL_SCALES,
    SI_SCALES,
    Boundary,
    DetectorParams,
    DetectorState,
    FreeSpace,
    PhysicalScales,
    Plate,
    SwitchingWindow,
    lorentz_factor,
    validate_state,
)
from src.force.components import FINITE_TIME, LONG_TIME, NORMALIZATIONS, RAW
from src.force.plate import ANGULAR_MODES, CLOSED
from src.numerics.quadrature import ToleranceSpec

SI = "si"
DIMENSIONLESS = "dimensionless"
UNIT_STYLES = (SI, DIMENSIONLESS)

THREADS_ENV = "UDWF_THREADS"

FORMATS = ("csv", "json")
SWEEP_PARAMETERS = ("delta_tau", "d", "v", "sigma_omega")
SPACINGS = ("linear", "log")
MAX_SWEEP_POINTS = 100_000

_REGIME_NAMES = {"finite": FINITE_TIME, FINITE_TIME: FINITE_TIME, "long": LONG_TIME, LONG_TIME: LONG_TIME}

_STYLE_KEYS = {
    SI: {"gap_omega", "smearing_sigma", "regulator_gamma", "velocity", "distance", "delta_tau"},
    DIMENSIONLESS: {"sigma_omega", "sigma_gamma", "beta_v", "d_over_sigma", "omega_delta_tau"},
}

# sweep parameter -> (section, key) for each unit style
_SWEEP_TARGETS = {
    SI: {
        "delta_tau": ("window", "delta_tau"),
        "d": ("boundary", "distance"),
        "v": ("trajectory", "velocity"),
        "sigma_omega": ("detector", "gap_omega"),
    },
    DIMENSIONLESS: {
        "delta_tau": ("window", "omega_delta_tau"),
        "d": ("boundary", "d_over_sigma"),
        "v": ("trajectory", "beta_v"),
        "sigma_omega": ("detector", "sigma_omega"),
    },
}


@dataclass(frozen=True)
class SweepSpec:
    """One swept parameter on a linear or logarithmic grid."""

    parameter: str
    start: float
    stop: float
    points: int
    spacing: str = "linear"

    def __post_init__(self) -> None:
        if self.parameter not in SWEEP_PARAMETERS:
            raise ValueError(f"sweep.parameter must be one of {SWEEP_PARAMETERS}, got {self.parameter!r}")
        if self.spacing not in SPACINGS:
            raise ValueError(f"sweep.spacing must be one of {SPACINGS}, got {self.spacing!r}")
        if not 2 <= self.points <= MAX_SWEEP_POINTS:
            raise ValueError(f"sweep.points must lie in [2, {MAX_SWEEP_POINTS}], got {self.points}")
        if not (math.isfinite(self.start) and math.isfinite(self.stop)) or self.start == self.stop:
            raise ValueError("sweep.start and sweep.stop must be finite and distinct")
        if self.spacing == "log" and (self.start <= 0 or self.stop <= 0):
            raise ValueError("a log sweep needs positive start and stop")

    def values(self) -> list[float]:
        if self.spacing == "log":
            grid = np.geomspace(self.start, self.stop, self.points)
        else:
            grid = np.linspace(self.start, self.stop, self.points)
        return [float(value) for value in grid]


@dataclass(frozen=True)
class OutputConfig:
    """Where results go and how they are expressed."""

    path: str | None
    format: str
    normalization: str


@dataclass(frozen=True)
class LoggingConfig:
    """Logging configuration."""

    level: str
    log_dir: str | None


@dataclass(frozen=True)
class RunConfig:
    """A fully validated run: physical inputs plus evaluation settings."""

    units: str
    params: DetectorParams
    scales: PhysicalScales
    state: DetectorState
    velocity: float
    boundary: Boundary
    window: SwitchingWindow
    regime: str
    angular: str
    tolerances: ToleranceSpec
    output: OutputConfig
    log: LoggingConfig
    threads: int
    sweep: SweepSpec | None = None
    source: dict[str, Any] = field(default_factory=dict, compare=False, repr=False)

    @property
    def is_plate(self) -> bool:
        return isinstance(self.boundary, Plate)

    def to_mapping(self) -> dict[str, Any]:
        """The resolved config in file form; parse_config(to_mapping()) rebuilds it."""
        mapping = copy.deepcopy(self.source)
        mapping["threads"] = self.threads
        return mapping

    def with_value(self, parameter: str, value: float) -> RunConfig:
        """Copy of this config with one sweep parameter replaced and the sweep removed."""
        if parameter not in SWEEP_PARAMETERS:
            raise ValueError(f"Unknown sweep parameter '{parameter}', expected one of {SWEEP_PARAMETERS}")
        if parameter == "d" and not self.is_plate:
            raise ValueError("sweeping d requires a plate boundary")
        mapping = copy.deepcopy(self.source)
        mapping.pop("sweep", None)
        section, key = _SWEEP_TARGETS[self.units][parameter]
        if self.units == SI and parameter == "sigma_omega":
            value = value * self.scales.c / self.params.smearing_sigma
        mapping[section][key] = float(value)
        return parse_config(mapping, threads=self.threads)


def _require_key(mapping: dict[str, Any], key: str, context: str) -> Any:
    if key not in mapping:
        raise ValueError(f"Missing required key '{key}' in {context} config")
    return mapping[key]


def _section(data: dict[str, Any], name: str) -> dict[str, Any]:
    section = _require_key(data, name, name)
    if not isinstance(section, dict):
        raise ValueError(f"'{name}' config must be a mapping")
    return section


def _number(mapping: dict[str, Any], key: str, context: str, default: float | None = None) -> float:
    raw = mapping.get(key, default) if default is not None else _require_key(mapping, key, context)
    if isinstance(raw, bool):
        raise ValueError(f"'{context}.{key}' must be a number, got {raw!r}")
    try:
        return float(raw)
    except (TypeError, ValueError) as exc:
        raise ValueError(f"'{context}.{key}' must be a number, got {raw!r}") from exc


def _check_style(data: dict[str, Any], units: str) -> None:
    other = DIMENSIONLESS if units == SI else SI
    for name, section in data.items():
        if not isinstance(section, dict):
            continue
        for key in section:
            if key in _STYLE_KEYS[other]:
                raise ValueError(f"'{name}.{key}' is a {other} key but units is '{units}'")


def resolve_threads(threads: int | None = None) -> int:
    """--threads, then UDWF_THREADS, then the hardware count."""
    if threads is None:
        raw = os.environ.get(THREADS_ENV, "").strip()
        if raw:
            try:
                threads = int(raw)
            except ValueError as exc:
                raise ValueError(f"{THREADS_ENV} must be an integer, got {raw!r}") from exc
        else:
            threads = os.cpu_count() or 1
    if threads < 1:
        raise ValueError(f"threads must be >= 1, got {threads}")
    return threads


def _physical(units: str, data: dict[str, Any]) -> tuple[DetectorParams, PhysicalScales, float, Boundary, SwitchingWindow]:
    detector = _section(data, "detector")
    trajectory = _section(data, "trajectory")
    boundary_section = _section(data, "boundary")
    window_section = _section(data, "window")
    coupling = _number(detector, "coupling_lambda", "detector", default=1.0)

    if units == SI:
        scales = SI_SCALES
        params = DetectorParams(
            gap_omega=_number(detector, "gap_omega", "detector"),
            smearing_sigma=_number(detector, "smearing_sigma", "detector"),
            coupling_lambda=coupling,
            regulator_gamma=_number(detector, "regulator_gamma", "detector", default=0.0),
        )
        velocity = _number(trajectory, "velocity", "trajectory")
        delta_tau = _number(window_section, "delta_tau", "window")
        distance_key = "distance"
    else:
        scales = NATURAL_SCALES
        sigma_omega = _number(detector, "sigma_omega", "detector")
        if not sigma_omega > 0:
            raise ValueError(f"'detector.sigma_omega' must be > 0 in dimensionless units, got {sigma_omega}")
        params = DetectorParams(
            gap_omega=sigma_omega,
            smearing_sigma=1.0,
            coupling_lambda=coupling,
            regulator_gamma=_number(detector, "sigma_gamma", "detector", default=0.0),
        )
        velocity = _number(trajectory, "beta_v", "trajectory")
        delta_tau = _number(window_section, "omega_delta_tau", "window") / sigma_omega
        distance_key = "d_over_sigma"

    lorentz_factor(velocity / scales.c)
    kind = _require_key(boundary_section, "kind", "boundary")
    if kind == "free":
        boundary: Boundary = FreeSpace()
    elif kind == "plate":
        reflection = complex(
            _number(boundary_section, "reflection_re", "boundary", default=1.0),
            _number(boundary_section, "reflection_im", "boundary", default=0.0),
        )
        boundary = Plate(distance=_number(boundary_section, distance_key, "boundary"), reflection=reflection)
    else:
        raise ValueError(f"'boundary.kind' must be 'free' or 'plate', got {kind!r}")
    return params, scales, velocity, boundary, SwitchingWindow(delta_tau)


def _sweep(data: dict[str, Any]) -> SweepSpec | None:
    section = data.get("sweep")
    if section is None:
        return None
    if not isinstance(section, dict):
        raise ValueError("'sweep' config must be a mapping")
    return SweepSpec(
        parameter=_require_key(section, "parameter", "sweep"),
        start=_number(section, "start", "sweep"),
        stop=_number(section, "stop", "sweep"),
        points=int(_number(section, "points", "sweep")),
        spacing=section.get("spacing", "linear"),
    )


def parse_config(data: Any, threads: int | None = None) -> RunConfig:
    """Validate a config mapping and build the RunConfig."""
    if not isinstance(data, dict):
        raise ValueError("Config file must contain a mapping at the top level")
    data = copy.deepcopy(data)
    if threads is None and "threads" in data:
        threads = int(_number(data, "threads", "top-level"))
    data.pop("threads", None)

    units = data.get("units", DIMENSIONLESS)
    if units not in UNIT_STYLES:
        raise ValueError(f"'units' must be one of {UNIT_STYLES}, got {units!r}")
    _check_style(data, units)

    params, scales, velocity, boundary, window = _physical(units, data)

    state_section = _section(data, "state")
    state = validate_state(
        DetectorState(
            excited_pop=_number(state_section, "excited_pop", "state"),
            coherence=complex(
                _number(state_section, "coherence_re", "state", default=0.0),
                _number(state_section, "coherence_im", "state", default=0.0),
            ),
        )
    )

    regime_section = _section(data, "regime")
    time_name = _require_key(regime_section, "time", "regime")
    if time_name not in _REGIME_NAMES:
        raise ValueError(f"'regime.time' must be 'finite' or 'long', got {time_name!r}")
    angular = regime_section.get("angular", CLOSED)
    if angular not in ANGULAR_MODES:
        raise ValueError(f"'regime.angular' must be one of {ANGULAR_MODES}, got {angular!r}")

    tol_section = _section(data, "tolerances")
    tolerances = ToleranceSpec(
        rel_tol=_number(tol_section, "rel_tol", "tolerances"),
        abs_tol=_number(tol_section, "abs_tol", "tolerances", default=0.0),
        max_evals=int(_number(tol_section, "max_evals", "tolerances", default=2_000_000)),
    )

    output_section = _section(data, "output")
    output = OutputConfig(
        path=output_section.get("path"),
        format=output_section.get("format", "csv"),
        normalization=output_section.get("normalization", RAW),
    )
    if output.format not in FORMATS:
        raise ValueError(f"'output.format' must be one of {FORMATS}, got {output.format!r}")
    if output.normalization not in NORMALIZATIONS:
        raise ValueError(f"'output.normalization' must be one of {NORMALIZATIONS}, got {output.normalization!r}")

    logging_section = _section(data, "logging")
    log = LoggingConfig(
        level=str(_require_key(logging_section, "level", "logging")).upper(),
        log_dir=logging_section.get("log_dir") or None,
    )
    if log.level not in LEVELS:
        raise ValueError(f"'logging.level' must be one of {tuple(LEVELS)}, got {log.level!r}")

    sweep = _sweep(data)
    if sweep is not None and sweep.parameter == "d" and not isinstance(boundary, Plate):
        raise ValueError("sweeping d requires boundary.kind = plate")

    data["units"] = units
    return RunConfig(
        units=units,
        params=params,
        scales=scales,
        state=state,
        velocity=velocity,
        boundary=boundary,
        window=window,
        regime=_REGIME_NAMES[time_name],
        angular=angular,
        tolerances=tolerances,
        output=output,
        log=log,
        threads=resolve_threads(threads),
        sweep=sweep,
        source=data,
    )


def load_config(path: str = "config/config.yaml", threads: int | None = None) -> RunConfig:
    """Load a run configuration from a YAML (or JSON) file."""
    load_dotenv()
    try:
        with open(path, "r", encoding="utf-8") as handle:
            data = yaml.safe_load(handle)
    except FileNotFoundError as exc:
        raise ValueError(f"Config file not found: {path}") from exc
    except yaml.YAMLError as exc:
        raise ValueError(f"Config file {path} is not valid YAML/JSON: {exc}") from exc

    config = parse_config(data, threads=threads)
    emit("config_loaded", {"path": path, "units": config.units, "threads": config.threads}, level="DEBUG")
    return config


__all__ = [
    "DIMENSIONLESS",
    "FORMATS",
    "SI",
    "SWEEP_PARAMETERS",
    "THREADS_ENV",
    "LoggingConfig",
    "OutputConfig",
    "RunConfig",
    "SweepSpec",
    "load_config",
    "parse_config",
    "resolve_threads",
]
