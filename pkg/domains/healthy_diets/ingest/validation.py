# ==============================================================================
# validation.py — Cross-file validation and dataset assembly
# ==============================================================================
# Purpose: Load every input, cross-reference ids and report location coverage
# Sections: Imports, Dataset Assembly, Cross-Reference Checks
# ==============================================================================

# Standard Library --------------------------------------------------------------
import logging
from collections import Counter, defaultdict
from typing import Dict, Optional, Set, Tuple

# Third Party -------------------------------------------------------------------
from pydantic import ValidationError

# Core (App-wide) ---------------------------------------------------------------
from core.config.run_config import InputPaths
from core.types.errors import IngestError
from core.types.models import GUIDELINE_GROUPS, Dataset, FoodGroup, ValidationReport

# Internal (Current Module) -----------------------------------------------------
from .issues import IssueLog
from .loaders import (
    load_ae_factors,
    load_composition,
    load_guidelines,
    load_households,
    load_items,
    load_nutrient_refs,
    load_prices,
    load_regions,
)

# Configure logging
logger = logging.getLogger(__name__)


def load_dataset(paths: InputPaths, period: Optional[str] = None) -> Tuple[Optional[Dataset], ValidationReport]:
    """Load and validate all inputs; the dataset is None when any fatal issue exists.

    `period` (YYYY-MM) is the price month coverage is checked against; the latest one when omitted.
    """
    log = IssueLog()
    loaded: Dict[str, object] = {}

    # 1️⃣ Items first so other files can be matched against them ----
    try:
        loaded["items"] = load_items(paths.items, log)
    except IngestError as e:
        logger.error("Failed to load input", extra={"file": str(paths.items), "error": str(e)})
    known_items = loaded.get("items")

    # 2️⃣ Remaining files; keep going to collect every fatal issue ----
    loaders = {
        "compositions": lambda: load_composition(paths.composition, log),
        "guideline": lambda: load_guidelines(paths.guidelines, log),
        "nutrient_refs": lambda: load_nutrient_refs(paths.nutrient_refs, log),
        "ae_table": lambda: load_ae_factors(paths.ae_factors, log),
        "region_names": lambda: load_regions(paths.regions, log),
        "prices": lambda: load_prices(paths.prices, log, known_items=known_items),
        "households": lambda: load_households(
            paths.households, paths.members, paths.consumption, log, known_items=known_items
        ),
    }
    for key, loader in loaders.items():
        try:
            loaded[key] = loader()
        except IngestError as e:
            logger.error("Failed to load input", extra={"input": key, "error": str(e)})

    if log.has_fatal:
        return None, log.to_report()

    # 3️⃣ Assemble and cross-check ----
    try:
        dataset = Dataset(**loaded)
    except ValidationError as e:
        log.fatal("dataset", None, str(e.errors()[0]["msg"]))
        return None, log.to_report()

    report = validate(dataset, log, period=period)
    return (None if report.has_fatal else dataset), report


def validate(dataset: Dataset, log: Optional[IssueLog] = None, period: Optional[str] = None) -> ValidationReport:
    """Cross-reference items, compositions and locations; report per-location group coverage.

    Coverage counts only prices of `period`, or of the latest month present, matching what CoHD uses.
    """
    log = log or IssueLog()
    period = period or max((obs.period for obs in dataset.prices), default=None)

    # 1️⃣ Every non-Excluded item resolves to a composition ----
    for item in dataset.items.values():
        if item.group == FoodGroup.EXCLUDED:
            continue
        if item.composition_key is None:
            log.fatal("items.csv", None, f"item {item.item_id!r} has no composition_key")
        elif item.composition_key not in dataset.compositions:
            log.fatal("items.csv", None, f"item {item.item_id!r} references absent composition_key {item.composition_key!r}")
        elif item.group in GUIDELINE_GROUPS and dataset.compositions[item.composition_key].energy_density <= 0:
            log.warn("items.csv", None, f"item {item.item_id!r} has zero energy density; unusable for CoHD")

    # 2️⃣ Duplicate price observations ----
    duplicates = Counter((p.item_id, p.location_id, p.period) for p in dataset.prices)
    for (item_id, location_id, month), count in sorted(duplicates.items()):
        if count > 1:
            log.warn("prices.csv", None, f"{count} prices for {item_id!r} at {location_id!r} in {month}; minimum kept")

    # 3️⃣ Group coverage per location, in the costed month only ----
    priced: Dict[str, Set[str]] = defaultdict(set)
    for obs in dataset.prices:
        if obs.period != period:
            continue
        priced[obs.location_id].add(obs.item_id)
    for location_id in sorted(priced):
        unsatisfiable = []
        for group in GUIDELINE_GROUPS:
            required = dataset.guideline.item_count(group)
            if required == 0:
                continue
            available = sum(1 for item_id in priced[location_id] if _usable_for_cost(dataset, item_id, group))
            if available < required:
                unsatisfiable.append(group)
                log.warn(
                    "prices.csv", None,
                    f"group {group.value} unsatisfiable at location {location_id!r}: {available} of {required} items priced in {period}",
                )
        if unsatisfiable:
            log.unsatisfiable[location_id] = unsatisfiable

    # 4️⃣ Household locations and regions ----
    for household in dataset.households:
        if household.location_id not in priced:
            log.warn("households.csv", None, f"household {household.household_id!r} lives at {household.location_id!r}, which has no price observations in {period}")
        if dataset.region_names and household.region_id not in dataset.region_names:
            log.warn("households.csv", None, f"household {household.household_id!r} has unlabeled region {household.region_id!r}")

    report = log.to_report()
    logger.info("Validation completed", extra={"issues": len(report.issues), "fatal": len(report.fatal)})
    return report


def _usable_for_cost(dataset: Dataset, item_id: str, group: FoodGroup) -> bool:
    item = dataset.items[item_id]
    if item.group != group:
        return False
    composition = dataset.composition_of(item_id)
    return composition is not None and composition.energy_density > 0
