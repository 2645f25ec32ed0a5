# ==============================================================================
# main.py — Command-line entry point
# ==============================================================================
# Purpose: Parse subcommands and flags, configure logging, dispatch to stage handlers
# Sections: Imports, Parser, Main Entry
# ==============================================================================

"""Command-line entry point for dietbench."""

# Standard Library --------------------------------------------------------------
import argparse
import logging
import sys
from typing import Optional, Sequence

# Core (App-wide) ---------------------------------------------------------------
from core.config.settings import settings

# Internal (Current Module) -----------------------------------------------------
from api.commands import COMMANDS, HELP, add_run_options

# Configure logging
logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=settings.app_name,
        description="Cost, affordability and adequacy of healthy diets from prices and household surveys.",
    )
    parser.add_argument("--version", action="version", version=f"{settings.app_name} {settings.app_version}")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        add_run_options(subparsers.add_parser(name, help=HELP[name]))
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    logging.basicConfig(level=settings.log_level)
    args = build_parser().parse_args(argv)
    logger.info("Starting command", extra={"command": args.command, "app_version": settings.app_version})
    return COMMANDS[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
