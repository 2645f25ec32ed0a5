"""Batch pipeline: stage orchestration and report emission."""

from .reports import SORT_KEYS
from .runner import (
    EXIT_CONFIG,
    EXIT_FATAL_VALIDATION,
    EXIT_IO,
    EXIT_OK,
    MANIFEST,
    VALIDATION_REPORT,
    Pipeline,
    run_stage,
)

__all__ = [
    "EXIT_CONFIG",
    "EXIT_FATAL_VALIDATION",
    "EXIT_IO",
    "EXIT_OK",
    "MANIFEST",
    "Pipeline",
    "SORT_KEYS",
    "VALIDATION_REPORT",
    "run_stage",
]
