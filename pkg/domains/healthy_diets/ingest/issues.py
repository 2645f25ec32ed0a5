# ==============================================================================
# issues.py — Issue collection during ingestion
# ==============================================================================
# Purpose: Accumulate per-file row counts and issues into a ValidationReport
# Sections: Imports, Issue Log
# ==============================================================================

# Standard Library --------------------------------------------------------------
import logging
from collections import defaultdict
from typing import Dict, List, Optional, Set

# Core (App-wide) ---------------------------------------------------------------
from core.types.errors import IngestError
from core.types.models import FoodGroup, InputCounts, Severity, ValidationIssue, ValidationReport

# Configure logging
logger = logging.getLogger(__name__)


class IssueLog:
    """Mutable collector used while loading; frozen into a ValidationReport at the end."""

    def __init__(self):
        self.issues: List[ValidationIssue] = []
        self._read: Dict[str, int] = defaultdict(int)
        self._rejected: Dict[str, int] = defaultdict(int)
        self.unmatched_items: Set[str] = set()
        self.unsatisfiable: Dict[str, List[FoodGroup]] = {}

    def warn(self, file: str, row: Optional[int], message: str) -> None:
        self.issues.append(ValidationIssue(severity=Severity.WARNING, file=file, row=row, message=message))

    def reject(self, file: str, row: Optional[int], message: str) -> None:
        """Drop a row; each rejected row gets exactly one warning."""
        self._rejected[file] += 1
        self.warn(file, row, message)

    def fatal(self, file: str, row: Optional[int], message: str) -> IngestError:
        """Record a fatal issue and return the error for the caller to raise."""
        issue = ValidationIssue(severity=Severity.FATAL, file=file, row=row, message=message)
        self.issues.append(issue)
        return IngestError(issue)

    def count_read(self, file: str, rows: int) -> None:
        self._read[file] += rows

    @property
    def has_fatal(self) -> bool:
        return any(i.severity == Severity.FATAL for i in self.issues)

    def to_report(self) -> ValidationReport:
        files = sorted(set(self._read) | set(self._rejected))
        warnings = sum(1 for i in self.issues if i.severity == Severity.WARNING)
        if warnings:
            logger.warning("Input issues recorded", extra={"warnings": warnings, "fatal": len(self.issues) - warnings})
        return ValidationReport(
            counts={f: InputCounts(rows_read=self._read[f], rows_rejected=self._rejected[f]) for f in files},
            issues=sorted(self.issues, key=lambda i: (i.file, i.row if i.row is not None else -1, i.severity.value, i.message)),
            unmatched_items=sorted(self.unmatched_items),
            unsatisfiable={loc: list(groups) for loc, groups in sorted(self.unsatisfiable.items())},
        )
