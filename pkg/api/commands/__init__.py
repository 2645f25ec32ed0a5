"""Subcommand handlers, one per pipeline stage."""

from .stages import (
    COMMANDS,
    HELP,
    add_run_options,
    cmd_adequacy,
    cmd_afford,
    cmd_cohd,
    cmd_run,
    cmd_validate,
    execute,
)

__all__ = [
    "COMMANDS",
    "HELP",
    "add_run_options",
    "cmd_adequacy",
    "cmd_afford",
    "cmd_cohd",
    "cmd_run",
    "cmd_validate",
    "execute",
]
