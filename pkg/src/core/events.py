"""Structured event lines written to stderr."""

from __future__ import annotations

import sys
import threading
from typing import Any

LEVELS = {"DEBUG": 10, "INFO": 20, "WARNING": 30, "ERROR": 40}

_lock = threading.Lock()
_threshold = LEVELS["INFO"]


def set_level(level: str) -> None:
    """Set the minimum level of events that are written."""
    global _threshold
    name = level.upper()
    if name not in LEVELS:
        raise ValueError(f"Unknown logging level '{level}'")
    _threshold = LEVELS[name]


def emit(event: str, payload: dict[str, Any], level: str = "INFO") -> None:
    """Write one `event {payload}` line if `level` passes the threshold."""
    if LEVELS.get(level, LEVELS["INFO"]) < _threshold:
        return
    with _lock:
        print(event, payload, file=sys.stderr, flush=True)
