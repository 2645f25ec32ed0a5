# ==============================================================================
# stages.py — Subcommand handlers for the batch pipeline
# ==============================================================================
# Purpose: Map each subcommand to a pipeline stage and each failure to an exit code
# Sections: Imports, Shared Options, Execution, Subcommands
# ==============================================================================

# Standard Library --------------------------------------------------------------
import argparse
import asyncio
import logging
from pathlib import Path
from typing import Any, Callable, Dict

# Core (App-wide) ---------------------------------------------------------------
from core.config.run_config import load_run_config
from core.types.errors import ConfigError, DietBenchError, StageFailure
from services.pipeline import EXIT_CONFIG, EXIT_FATAL_VALIDATION, EXIT_IO, EXIT_OK, run_stage

# Configure logging
logger = logging.getLogger(__name__)


def add_run_options(parser: argparse.ArgumentParser) -> None:
    """Flags shared by every subcommand; any flag given overrides the config file."""
    parser.add_argument("--config", required=True, type=Path, help="Run configuration JSON file")
    parser.add_argument("--out", type=Path, default=None, help="Output directory (overrides output_dir)")
    parser.add_argument(
        "--no-discretionary", dest="include_discretionary", action="store_const", const=False, default=None,
        help="Cost the diet without the discretionary allowance",
    )
    parser.add_argument("--fallback-region", default=None, help="Borrow prices from this region when a group is short locally")
    parser.add_argument("--quintile-rank", choices=["percapita", "perae"], default=None, help="Expenditure normalization for quintiles")
    parser.add_argument("--quintile-weight", choices=["persons", "households"], default=None, help="Weighting unit for quintiles and tables")
    parser.add_argument("--threads", type=int, default=None, help="Worker threads (overrides DIETBENCH_THREADS)")


def overrides_from(args: argparse.Namespace) -> Dict[str, Any]:
    return {
        "output_dir": args.out,
        "include_discretionary": args.include_discretionary,
        "fallback_parent_region": args.fallback_region,
        "quintile_rank": args.quintile_rank,
        "quintile_weight": args.quintile_weight,
        "threads": args.threads,
    }


def execute(stage: str, args: argparse.Namespace) -> int:
    """Run one stage and translate the outcome into the process exit code."""
    # 1️⃣ Load the run config with flag overrides ----
    try:
        config = load_run_config(args.config, overrides_from(args))
    except ConfigError as e:
        logger.error("Invalid run configuration", extra={"stage": stage, "error": str(e)})
        return EXIT_CONFIG

    # 2️⃣ Run the stage ----
    try:
        pipeline = asyncio.run(run_stage(config, stage))
    except StageFailure as e:
        logger.error("Stage aborted", extra={"stage": e.stage, "error": str(e), "exit_code": e.exit_code})
        return e.exit_code
    except OSError as e:
        logger.error("I/O failure", extra={"stage": stage, "error": str(e)})
        return EXIT_IO
    except DietBenchError as e:
        logger.error("Stage failed on unusable input", extra={"stage": stage, "error": str(e)})
        return EXIT_FATAL_VALIDATION

    logger.info("Outputs written", extra={"stage": stage, "output_dir": str(config.output_dir), "files": sorted(pipeline.outputs)})
    return EXIT_OK


def cmd_validate(args: argparse.Namespace) -> int:
    return execute("validate", args)


def cmd_cohd(args: argparse.Namespace) -> int:
    return execute("cohd", args)


def cmd_afford(args: argparse.Namespace) -> int:
    return execute("afford", args)


def cmd_adequacy(args: argparse.Namespace) -> int:
    return execute("adequacy", args)


def cmd_run(args: argparse.Namespace) -> int:
    return execute("run", args)


COMMANDS: Dict[str, Callable[[argparse.Namespace], int]] = {
    "validate": cmd_validate,
    "cohd": cmd_cohd,
    "afford": cmd_afford,
    "adequacy": cmd_adequacy,
    "run": cmd_run,
}

HELP = {
    "validate": "Load and cross-check inputs; write validation_report.json",
    "cohd": "Least-cost healthy diet per location and regional summary",
    "afford": "Affordability, expenditure quintiles and descriptive tables",
    "adequacy": "Energy-adjusted diets, nutrient and food-group adequacy",
    "run": "All stages plus run_manifest.json",
}
