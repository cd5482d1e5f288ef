"""Command implementations behind scripts/udwf.py."""

from src.cli.commands import (
    EXIT_INVALID_INPUT,
    EXIT_OK,
    EXIT_TOLERANCE,
    EXIT_VERIFY_FAILED,
    HANDLED_ERRORS,
    applicable_keys,
    cmd_force,
    exit_code_for,
)
from src.cli.figures import FIGURES, cmd_figure, figure_tables
from src.cli.output import Table, append_run, record_table, write_text
from src.cli.sweep import cmd_sweep, ordered_map
from src.cli.verify import CRITERIA, FAST_SUITE, cmd_verify

__all__ = [
    "CRITERIA",
    "EXIT_INVALID_INPUT",
    "EXIT_OK",
    "EXIT_TOLERANCE",
    "EXIT_VERIFY_FAILED",
    "FAST_SUITE",
    "FIGURES",
    "HANDLED_ERRORS",
    "Table",
    "append_run",
    "applicable_keys",
    "cmd_figure",
    "cmd_force",
    "cmd_sweep",
    "cmd_verify",
    "exit_code_for",
    "figure_tables",
    "ordered_map",
    "record_table",
    "write_text",
]
