"""Single-point evaluation and the pieces shared by every command."""

from __future__ import annotations

from dataclasses import asdict
from typing import Any

from src.asymptotics.catalogue import RegimeKey, asymptote, keys_for
from src.config import RunConfig
from src.core.errors import ToleranceNotMet, UDWFError
from src.core.params import DimensionlessGroups, force_unit, to_dimensionless
from src.force.components import FINITE_TIME, RAW, SI_NEWTON, ForceComponents, normalization_divisor, normalize
from src.force.free import force_free
from src.force.plate import force_plate

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INVALID_INPUT = 2
EXIT_TOLERANCE = 3


HANDLED_ERRORS = (UDWFError, ValueError, KeyError)


def exit_code_for(exc: Exception) -> int:
    """Map a handled failure to the CLI exit code."""
    if isinstance(exc, ToleranceNotMet):
        return EXIT_TOLERANCE
    return EXIT_INVALID_INPUT


def state_name(excited_pop: float) -> str | None:
    if excited_pop == 0.0:
        return "ground"
    if excited_pop == 1.0:
        return "excited"
    return None


def evaluate(config: RunConfig) -> ForceComponents:
    """Raw force (free space) or plate correction for one configuration."""
    if config.is_plate:
        return force_plate(
            config.params,
            config.state,
            config.velocity,
            config.boundary,
            config.window,
            regime=config.regime,
            tol=config.tolerances,
            angular=config.angular,
            scales=config.scales,
        )
    return force_free(
        config.params,
        config.state,
        config.velocity,
        config.window,
        regime=config.regime,
        tol=config.tolerances,
        scales=config.scales,
    )


def groups_for(config: RunConfig) -> DimensionlessGroups:
    return to_dimensionless(config.params, config.boundary, config.velocity, config.window, config.scales)


def _unit_factor(config: RunConfig) -> float:
    """Multiplier taking a raw value into the configured normalization."""
    kind = config.output.normalization
    if kind == RAW:
        return 1.0
    if kind == SI_NEWTON:
        return force_unit(config.params, config.scales)
    return 1.0 / normalization_divisor(kind, groups_for(config))


def present(force: ForceComponents, config: RunConfig) -> ForceComponents:
    """Express a raw result in the configured normalization."""
    kind = config.output.normalization
    if kind == RAW:
        return force
    if kind == SI_NEWTON:
        return force.to_si(config.params, config.scales)
    return normalize(force, kind, groups_for(config))


def applicable_keys(config: RunConfig) -> list[RegimeKey]:
    """Catalogue entries describing this configuration's state, boundary and time regime."""
    state = state_name(config.state.excited_pop)
    if state is None or config.params.gap_omega <= 0:
        return []
    if config.is_plate:
        keys = keys_for(True, "short" if config.regime == FINITE_TIME else "long")
    elif config.regime == FINITE_TIME:
        keys = keys_for(False)
    else:
        keys = [key for key in keys_for(False, "long") if key.contribution == "delta"]
    return [key for key in keys if key.state == state]


def asymptote_values(config: RunConfig, keys: list[RegimeKey], warn: bool = True) -> dict[str, float | None]:
    """Closed-form values in the configured normalization, None where a limit is undefined."""
    boundary = config.boundary
    d = boundary.distance if config.is_plate else None
    R = boundary.reflection if config.is_plate else 1.0 + 0j
    to_raw = 1.0 / force_unit(config.params, config.scales)
    factor = _unit_factor(config)
    values: dict[str, float | None] = {}
    for key in keys:
        try:
            value = asymptote(key, config.params, config.velocity, d, R, config.window, config.scales, warn)
        except (ValueError, ZeroDivisionError):
            values[key.label] = None
            continue
        values[key.label] = value * to_raw * factor
    return values


def cmd_force(config: RunConfig) -> dict[str, Any]:
    """Evaluate one configuration and return its result record."""
    force = evaluate(config)
    if not force.converged:
        raise ToleranceNotMet(f"force evaluation did not reach rel_tol={config.tolerances.rel_tol}")
    return {
        "command": "force",
        "boundary": "plate" if config.is_plate else "free",
        "regime": config.regime,
        "force": present(force, config).to_mapping(),
        "groups": asdict(groups_for(config)),
        "asymptotes": asymptote_values(config, applicable_keys(config)),
        "config": config.to_mapping(),
    }


__all__ = [
    "EXIT_INVALID_INPUT",
    "EXIT_OK",
    "EXIT_TOLERANCE",
    "EXIT_VERIFY_FAILED",
    "HANDLED_ERRORS",
    "applicable_keys",
    "asymptote_values",
    "cmd_force",
    "evaluate",
    "exit_code_for",
    "groups_for",
    "present",
    "state_name",
]
