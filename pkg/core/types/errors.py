# ==============================================================================
# errors.py — Exception hierarchy shared by every layer
# ==============================================================================
# Purpose: Typed failures for ingestion, conversion, selection and configuration
# Sections: Imports, Base Error, Ingestion Errors, Computation Errors, Config and Stage Errors
# ==============================================================================

# Standard Library --------------------------------------------------------------
from typing import TYPE_CHECKING, Optional

if TYPE_CHECKING:
    from core.types.models import FoodGroup, ValidationIssue


class DietBenchError(Exception):
    """Base class for all toolkit errors."""


class IngestError(DietBenchError):
    """Fatal input problem; carries the issue that will appear in the report."""

    def __init__(self, issue: "ValidationIssue"):
        self.issue = issue
        location = f"{issue.file}" + (f", row {issue.row}" if issue.row is not None else "")
        super().__init__(f"{location}: {issue.message}")


class LookupFailure(DietBenchError, LookupError):
    """Adult-equivalent table cannot resolve a household member."""

    def __init__(self, member_index: int, age_years: int, sex: str):
        self.member_index = member_index
        super().__init__(
            f"No adult-equivalent factor for member {member_index} (age {age_years}, sex {sex})"
        )


class NonConvertibleError(DietBenchError, ValueError):
    """Price cannot be expressed per kilocalorie (zero energy or edible fraction)."""


class InsufficientItemsError(DietBenchError):
    """A food group has fewer priced items than the guideline asks for."""

    def __init__(self, group: "FoodGroup", available: int, required: int, location_id: Optional[str] = None):
        self.group = group
        self.available = available
        self.required = required
        self.location_id = location_id
        super().__init__(
            f"{group.value}: {available} priced item(s) available, {required} required"
            + (f" at {location_id}" if location_id else "")
        )


class ZeroEnergyError(DietBenchError, ValueError):
    """Household reports no positive dietary energy."""

    def __init__(self, household_id: str):
        self.household_id = household_id
        super().__init__(f"Household {household_id} reports zero dietary energy")


class ConfigError(DietBenchError):
    """Run configuration is missing, unparseable or inconsistent."""


class UnresolvedItemError(DietBenchError, KeyError):
    """Item does not resolve to a composition record."""

    def __init__(self, item_id: str):
        self.item_id = item_id
        super().__init__(f"Item {item_id!r} does not resolve to a composition record")

    def __str__(self) -> str:
        return self.args[0]


class StageFailure(DietBenchError):
    """A pipeline stage aborted; carries the stage name and the process exit code."""

    def __init__(self, stage: str, message: str, exit_code: int):
        self.stage = stage
        self.exit_code = exit_code
        super().__init__(f"{stage}: {message}")
