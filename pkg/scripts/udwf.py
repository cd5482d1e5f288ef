"""Command-line entry point: force, sweep, figure and verify."""

from __future__ import annotations

import argparse
from pathlib import Path
import sys

sys.path.insert(0, str(Path(__file__).resolve().parents[1]))

from src.cli import (  # noqa: E402
    EXIT_OK,
    EXIT_TOLERANCE,
    EXIT_VERIFY_FAILED,
    FIGURES,
    HANDLED_ERRORS,
    append_run,
    cmd_figure,
    cmd_force,
    cmd_sweep,
    cmd_verify,
    exit_code_for,
    record_table,
    write_text,
)
from src.cli.output import json_text  # noqa: E402
from src.config import FORMATS, RunConfig, load_config, parse_config, resolve_threads  # noqa: E402
from src.core.events import emit, set_level  # noqa: E402

REGIME_FLAGS = {"finite": "finite", "long": "long"}


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description="Four-force on a finite-size detector near a plate")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_run_flags(command: argparse.ArgumentParser) -> None:
        command.add_argument("--config", default="config/config.yaml", help="Run configuration (YAML or JSON)")
        command.add_argument("--out", default=None, help="Output file; defaults to output.path, then stdout")
        command.add_argument("--format", choices=FORMATS, default=None, help="Output format")
        command.add_argument("--threads", type=int, default=None, help="Worker threads (env UDWF_THREADS)")
        command.add_argument("--regime", choices=sorted(REGIME_FLAGS), default=None, help="Override regime.time")

    add_run_flags(sub.add_parser("force", help="Evaluate one configuration"))
    add_run_flags(sub.add_parser("sweep", help="Evaluate the configured sweep"))

    figure = sub.add_parser("figure", help="Write the data behind one figure")
    figure.add_argument("figure_id", help=f"One of {', '.join(sorted(FIGURES))}")
    figure.add_argument("--out", default="figures", help="Output directory")
    figure.add_argument("--threads", type=int, default=None, help="Worker threads (env UDWF_THREADS)")

    verify = sub.add_parser("verify", help="Run the oracle suite")
    verify.add_argument("--suite", choices=["fast", "full"], default="fast")
    return parser


def _load(args: argparse.Namespace) -> RunConfig:
    config = load_config(args.config, threads=args.threads)
    if args.regime is not None:
        mapping = config.to_mapping()
        mapping["regime"]["time"] = REGIME_FLAGS[args.regime]
        config = parse_config(mapping, threads=config.threads)
    set_level(config.log.level)
    return config


def _run(args: argparse.Namespace) -> int:
    if args.command == "verify":
        report = cmd_verify(args.suite)
        for line in report.lines():
            print(line, flush=True)
        return EXIT_OK if report.passed else EXIT_VERIFY_FAILED

    if args.command == "figure":
        paths = cmd_figure(args.figure_id, args.out, threads=resolve_threads(args.threads))
        for path in paths:
            print(path, flush=True)
        return EXIT_OK

    config = _load(args)
    fmt = args.format or config.output.format
    out = args.out or config.output.path
    if args.command == "force":
        record = cmd_force(config)
        text = json_text(record) if fmt == "json" else record_table(record).to_csv()
        write_text(out, text)
        append_run(config.log.log_dir, "force", record)
        return EXIT_OK

    table = cmd_sweep(config)
    write_text(out, table.render(fmt))
    append_run(
        config.log.log_dir,
        "sweep",
        {"metadata": table.metadata, "columns": list(table.header), "rows": table.rows},
    )
    if table.metadata["unconverged"]:
        emit("sweep_unconverged", {"values": table.metadata["unconverged"]}, level="ERROR")
        return EXIT_TOLERANCE
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    try:
        return _run(args)
    except HANDLED_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr, flush=True)
        return exit_code_for(exc)


if __name__ == "__main__":
    raise SystemExit(main())
