"""Flat-file writers: CSV with '#' metadata, JSON records and the runs log."""

from __future__ import annotations

from dataclasses import dataclass, field
from datetime import datetime, timezone
import json
import os
from pathlib import Path
import sys
from typing import Any, Iterable, Sequence

RUNS_LOG = "runs.jsonl"


def format_value(value: Any) -> str:
    """Floats with 17 significant digits; everything else as text."""
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, float):
        return format(value, ".17g")
    if value is None:
        return ""
    return str(value)


def csv_text(header: Sequence[str], rows: Iterable[Sequence[Any]], metadata: dict[str, Any] | None = None) -> str:
    lines = []
    for key in sorted(metadata or {}):
        lines.append(f"# {key}: {json.dumps(metadata[key], sort_keys=True, ensure_ascii=False)}")
    lines.append(",".join(header))
    for row in rows:
        if len(row) != len(header):
            raise ValueError(f"row has {len(row)} values for {len(header)} columns")
        lines.append(",".join(format_value(value) for value in row))
    return "\n".join(lines) + "\n"


def json_text(record: dict[str, Any]) -> str:
    return json.dumps(record, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


@dataclass(frozen=True)
class Table:
    """Column names, ordered rows and '#' metadata of a tabular result."""

    header: tuple[str, ...]
    rows: list[list[Any]]
    metadata: dict[str, Any] = field(default_factory=dict)

    def column(self, name: str) -> list[Any]:
        index = self.header.index(name)
        return [row[index] for row in self.rows]

    def to_csv(self) -> str:
        return csv_text(self.header, self.rows, self.metadata)

    def to_json(self) -> str:
        return json_text({"metadata": self.metadata, "columns": list(self.header), "rows": self.rows})

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json()
        return self.to_csv()


def write_text(path: str | None, text: str) -> None:
    """Write to `path`, or to stdout when no path is given."""
    if path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    with open(target, "w", encoding="utf-8", newline="") as handle:
        handle.write(text)


def flatten(record: dict[str, Any], prefix: str = "") -> dict[str, Any]:
    """Nested mappings become dotted column names."""
    flat: dict[str, Any] = {}
    for key, value in record.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            flat.update(flatten(value, prefix=f"{name}."))
        elif isinstance(value, (list, tuple)):
            flat[name] = " ".join(format_value(item) for item in value)
        else:
            flat[name] = value
    return flat


def record_table(record: dict[str, Any]) -> Table:
    """A result record as a one-row table; the embedded config becomes metadata."""
    flat = flatten({key: value for key, value in record.items() if key != "config"})
    return Table(tuple(flat), [list(flat.values())], {"config": record.get("config", {})})


def _utc_now_iso() -> str:
    return datetime.now(timezone.utc).isoformat()


def _write_jsonl(path: str, record: dict[str, Any]) -> None:
    with open(path, "a", encoding="utf-8") as handle:
        handle.write(json.dumps(record, ensure_ascii=False) + "\n")


def append_run(log_dir: str | None, command: str, record: dict[str, Any]) -> None:
    """Append one command's record to <log_dir>/runs.jsonl."""
    if not log_dir:
        return
    os.makedirs(log_dir, exist_ok=True)
    _write_jsonl(os.path.join(log_dir, RUNS_LOG), {"timestamp": _utc_now_iso(), "command": command, "record": record})


__all__ = [
    "RUNS_LOG",
    "Table",
    "append_run",
    "csv_text",
    "flatten",
    "format_value",
    "json_text",
    "record_table",
    "write_text",
]
