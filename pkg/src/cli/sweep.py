"""Parameter sweeps evaluated point by point on a worker pool."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
import time
from typing import Any, Callable, Sequence, TypeVar

from src.cli.commands import applicable_keys, asymptote_values, evaluate, present
from src.cli.output import Table
from src.config import RunConfig
from src.core.events import emit
from src.force.components import COMPONENT_NAMES

T = TypeVar("T")
R = TypeVar("R")

PART_COLUMNS = ("x", "z")


def ordered_map(func: Callable[[T], R], items: Sequence[T], threads: int) -> list[R]:
    """Apply `func` to every item; results come back in input order."""
    if threads <= 1 or len(items) <= 1:
        return [func(item) for item in items]
    with ThreadPoolExecutor(max_workers=min(threads, len(items))) as pool:
        return list(pool.map(func, items))


def _header(config: RunConfig, labels: list[str], parts: list[str]) -> tuple[str, ...]:
    columns = [config.sweep.parameter]
    columns += [f"F_{name}" for name in COMPONENT_NAMES]
    columns += [f"err_{name}" for name in COMPONENT_NAMES]
    columns.append("converged")
    columns += [f"F_{name}_{part}" for part in parts for name in PART_COLUMNS]
    columns += [f"asymptote:{label}" for label in labels]
    return tuple(columns)


def cmd_sweep(config: RunConfig) -> Table:
    """Evaluate the configured sweep; one row per grid point in grid order."""
    if config.sweep is None:
        raise ValueError("cmd_sweep needs a 'sweep' section in the config")
    spec = config.sweep
    grid = spec.values()
    keys = applicable_keys(config)
    labels = [key.label for key in keys]
    started = time.monotonic()

    def point(value: float) -> tuple[list[Any], list[str]]:
        point_config = config.with_value(spec.parameter, value)
        force = present(evaluate(point_config), point_config)
        asymptotes = asymptote_values(point_config, keys, warn=False)
        parts = sorted(force.parts)
        row: list[Any] = [value, *force.F, *force.err, force.converged]
        for part in parts:
            row += [force.parts[part].x, force.parts[part].z]
        row += [asymptotes[label] for label in labels]
        emit("sweep_point", {"parameter": spec.parameter, "value": value, "converged": force.converged}, level="DEBUG")
        return row, parts

    results = ordered_map(point, grid, config.threads)
    parts = results[0][1]
    rows = [row for row, _ in results]
    unconverged = [row[0] for row in rows if not row[9]]
    emit(
        "sweep_done",
        {
            "parameter": spec.parameter,
            "points": len(rows),
            "unconverged": len(unconverged),
            "threads": config.threads,
            "seconds": round(time.monotonic() - started, 3),
        },
    )
    metadata = {
        "command": "sweep",
        "boundary": "plate" if config.is_plate else "free",
        "regime": config.regime,
        "normalization": config.output.normalization,
        "unconverged": unconverged,
        "config": config.to_mapping(),
    }
    return Table(_header(config, labels, parts), rows, metadata)


__all__ = ["cmd_sweep", "ordered_map"]
