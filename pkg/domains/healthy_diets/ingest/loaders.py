# ==============================================================================
# loaders.py — CSV loaders for the ten input files
# ==============================================================================
# Purpose: Read, normalize and type-check each input file, recording issues
# Sections: Imports, Parsing Helpers, Reference Loaders, Price Loader,
#           Household Loader, Serialization
# ==============================================================================

# Standard Library --------------------------------------------------------------
import logging
import math
from decimal import Decimal, InvalidOperation
from pathlib import Path
from typing import Collection, Dict, List, Optional, Tuple, Union

# Third Party -------------------------------------------------------------------
import pandas as pd
from pydantic import ValidationError

# Core (App-wide) ---------------------------------------------------------------
from core.types.models import (
    GUIDELINE_GROUPS,
    AeFactor,
    AeFactorTable,
    CompositionRecord,
    ConsumptionRecord,
    FoodGroup,
    FoodItem,
    GroupGuideline,
    GuidelineSet,
    Household,
    Member,
    NutrientId,
    NutrientReferenceSet,
    PriceObservation,
    Sex,
)
from core.utils.units import price_per_gram

# Internal (Current Module) -----------------------------------------------------
from . import schemas
from .issues import IssueLog

# Configure logging
logger = logging.getLogger(__name__)

PathLike = Union[str, Path]
Row = Tuple[int, Dict[str, str]]


# Parsing Helpers ---------------------------------------------------------------

def _read_table(path: PathLike, required: Collection[str], log: IssueLog) -> Tuple[str, List[Row], List[str]]:
    """Read a UTF-8 CSV as strings; returns (file name, numbered rows, columns)."""
    name = Path(path).name
    try:
        frame = pd.read_csv(path, dtype=str, keep_default_na=False, encoding="utf-8")
    except FileNotFoundError:
        raise log.fatal(name, None, f"file not found: {path}")
    except (OSError, UnicodeDecodeError, pd.errors.ParserError, pd.errors.EmptyDataError) as e:
        raise log.fatal(name, None, f"cannot read {path}: {str(e)}")

    columns = [str(c).strip() for c in frame.columns]
    frame.columns = columns
    missing = [c for c in required if c not in columns]
    if missing:
        raise log.fatal(name, 1, f"missing column(s): {', '.join(missing)}")

    log.count_read(name, len(frame))
    # header is line 1; data starts on line 2
    rows = [
        (index + 2, {key: str(value).strip() for key, value in record.items()})
        for index, record in enumerate(frame.to_dict("records"))
    ]
    return name, rows, columns


def _parse_decimal(text: str) -> Optional[Decimal]:
    try:
        value = Decimal(text)
    except (InvalidOperation, ValueError):
        return None
    return value if value.is_finite() else None


def _parse_float(text: str) -> Optional[float]:
    try:
        value = float(text)
    except ValueError:
        return None
    return value if math.isfinite(value) else None


def _parse_int(text: str) -> Optional[int]:
    try:
        return int(text)
    except ValueError:
        value = _parse_float(text)
        if value is not None and value.is_integer():
            return int(value)
        return None


def _parse_bool(text: str) -> Optional[bool]:
    lowered = text.lower()
    if lowered in ("1", "true", "yes", "rural"):
        return True
    if lowered in ("0", "false", "no", "urban"):
        return False
    return None


def _parse_group(text: str) -> Optional[FoodGroup]:
    try:
        return FoodGroup(text)
    except ValueError:
        return None


# Reference Loaders -------------------------------------------------------------

def load_items(path: PathLike, log: Optional[IssueLog] = None) -> Dict[str, FoodItem]:
    """Load the item list; item ids must be unique."""
    log = log or IssueLog()
    name, rows, _ = _read_table(path, schemas.ITEMS, log)
    items: Dict[str, FoodItem] = {}
    first_row: Dict[str, int] = {}

    for row_number, row in rows:
        item_id = row["item_id"]
        if not item_id:
            log.reject(name, row_number, "blank item_id")
            continue
        if item_id in items:
            raise log.fatal(name, row_number, f"duplicate item_id {item_id!r} (first seen on row {first_row[item_id]})")
        group = _parse_group(row["group"])
        if group is None:
            log.reject(name, row_number, f"unknown food group {row['group']!r}")
            continue
        items[item_id] = FoodItem(
            item_id=item_id,
            name=row["name"],
            group=group,
            composition_key=row["composition_key"] or None,
        )
        first_row[item_id] = row_number

    return dict(sorted(items.items()))


def usable_items(items: Dict[str, FoodItem]) -> Dict[str, FoodItem]:
    """Items that take part in any computation (everything but Excluded)."""
    return {item_id: item for item_id, item in items.items() if item.group != FoodGroup.EXCLUDED}


def load_composition(path: PathLike, log: Optional[IssueLog] = None) -> Dict[str, CompositionRecord]:
    """Load the food composition table keyed by composition_key."""
    log = log or IssueLog()
    name, rows, _ = _read_table(path, schemas.COMPOSITION, log)
    records: Dict[str, CompositionRecord] = {}
    first_row: Dict[str, int] = {}

    for row_number, row in rows:
        key = row["composition_key"]
        if not key:
            log.reject(name, row_number, "blank composition_key")
            continue
        if key in first_row:
            raise log.fatal(name, row_number, f"duplicate composition_key {key!r} on rows {first_row[key]} and {row_number}")
        first_row[key] = row_number
        notes: List[str] = []

        # 1️⃣ Energy density ----
        energy = _parse_float(row["energy_kcal_100g"])
        if energy is None:
            log.reject(name, row_number, f"unparseable energy_kcal_100g {row['energy_kcal_100g']!r}")
            continue
        if energy < 0:
            raise log.fatal(name, row_number, f"negative energy density for {key!r}")

        # 2️⃣ Edible fraction, defaulting to whole ----
        if not row["edible_fraction"]:
            edible_fraction = 1.0
            notes.append(f"blank edible_fraction for {key!r}; using 1.0")
        else:
            edible_fraction = _parse_float(row["edible_fraction"])
            if edible_fraction is None or not 0 < edible_fraction <= 1:
                log.reject(name, row_number, f"edible_fraction {row['edible_fraction']!r} outside (0, 1]")
                continue

        # 3️⃣ Nutrient densities; blanks count as zero ----
        nutrients: Dict[NutrientId, float] = {}
        bad_column = None
        for nutrient, column in schemas.NUTRIENT_COLUMNS.items():
            text = row[column]
            if not text:
                notes.append(f"blank {column} for {key!r}; treated as zero")
                nutrients[nutrient] = 0.0
                continue
            value = _parse_float(text)
            if value is None or value < 0:
                bad_column = column
                break
            nutrients[nutrient] = value
        if bad_column is not None:
            log.reject(name, row_number, f"invalid {bad_column} {row[bad_column]!r}")
            continue

        # Blank-cell warnings only for rows that are kept
        for note in notes:
            log.warn(name, row_number, note)

        records[key] = CompositionRecord(
            composition_key=key,
            energy_density=energy,
            edible_fraction=edible_fraction,
            nutrients=nutrients,
        )

    return dict(sorted(records.items()))


def serialize_composition(records: Dict[str, CompositionRecord], path: PathLike) -> None:
    """Write records back in the composition.csv schema, losslessly."""
    rows = []
    for key in sorted(records):
        record = records[key]
        row = {
            "composition_key": key,
            "energy_kcal_100g": repr(record.energy_density),
            "edible_fraction": repr(record.edible_fraction),
        }
        for nutrient, column in schemas.NUTRIENT_COLUMNS.items():
            row[column] = repr(record.nutrients[nutrient])
        rows.append(row)
    frame = pd.DataFrame(rows, columns=list(schemas.COMPOSITION))
    frame.to_csv(path, index=False, lineterminator="\n")


def load_guidelines(path: PathLike, log: Optional[IssueLog] = None) -> GuidelineSet:
    """Load per-group energy targets and item counts plus the TOTAL row."""
    log = log or IssueLog()
    name, rows, _ = _read_table(path, schemas.GUIDELINES, log)
    groups: Dict[FoodGroup, GroupGuideline] = {}
    total: Optional[float] = None

    for row_number, row in rows:
        energy = _parse_float(row["energy_kcal"])
        if energy is None or energy < 0:
            raise log.fatal(name, row_number, f"invalid energy_kcal {row['energy_kcal']!r}")
        if row["group"].upper() == schemas.TOTAL_ROW:
            total = energy
            continue
        group = _parse_group(row["group"])
        if group is None or group not in GUIDELINE_GROUPS:
            raise log.fatal(name, row_number, f"group {row['group']!r} has no guideline target")
        if group in groups:
            raise log.fatal(name, row_number, f"duplicate guideline row for {group.value}")
        item_count = _parse_int(row["item_count"])
        if item_count is None or item_count < 0:
            raise log.fatal(name, row_number, f"invalid item_count {row['item_count']!r}")
        try:
            groups[group] = GroupGuideline(energy_target=energy, item_count=item_count)
        except ValidationError as e:
            raise log.fatal(name, row_number, f"{group.value}: {e.errors()[0]['msg']}")

    missing = [g.value for g in GUIDELINE_GROUPS if g not in groups]
    if missing:
        raise log.fatal(name, None, f"missing guideline group(s): {', '.join(missing)}")
    if total is None:
        raise log.fatal(name, None, f"missing {schemas.TOTAL_ROW} row")
    target_sum = sum(g.energy_target for g in groups.values())
    if abs(target_sum - total) > 0.5:
        raise log.fatal(name, None, f"group targets sum to {target_sum:g} kcal but {schemas.TOTAL_ROW} is {total:g} kcal")

    return GuidelineSet(groups={g: groups[g] for g in GUIDELINE_GROUPS}, total_energy=total)


def load_nutrient_refs(path: PathLike, log: Optional[IssueLog] = None) -> NutrientReferenceSet:
    """Load the 14 reference intakes; every nutrient must be present and positive."""
    log = log or IssueLog()
    name, rows, _ = _read_table(path, schemas.NUTRIENT_REFS, log)
    by_name = {n.value.lower(): n for n in NutrientId}
    references: Dict[NutrientId, float] = {}

    for row_number, row in rows:
        nutrient = by_name.get(row["nutrient"].lower())
        if nutrient is None:
            log.reject(name, row_number, f"unknown nutrient {row['nutrient']!r}")
            continue
        value = _parse_float(row["reference_value"])
        if value is None or value <= 0:
            raise log.fatal(name, row_number, f"reference value for {nutrient.value} must be positive, got {row['reference_value']!r}")
        references[nutrient] = value

    missing = [n.value for n in NutrientId if n not in references]
    if missing:
        raise log.fatal(name, None, f"missing nutrient reference(s): {', '.join(missing)}")
    return NutrientReferenceSet(references={n: references[n] for n in NutrientId})


def load_ae_factors(path: PathLike, log: Optional[IssueLog] = None) -> AeFactorTable:
    """Load adult-equivalent factors; a blank age_max means open-ended."""
    log = log or IssueLog()
    name, rows, _ = _read_table(path, schemas.AE_FACTORS, log)
    factors: List[AeFactor] = []

    for row_number, row in rows:
        try:
            factors.append(AeFactor(
                sex=row["sex"].lower(),
                age_min=_parse_int(row["age_min"]),
                age_max=_parse_int(row["age_max"]) if row["age_max"] else None,
                factor=_parse_float(row["factor"]),
            ))
        except ValidationError as e:
            raise log.fatal(name, row_number, f"invalid adult-equivalent row: {e.errors()[0]['msg']}")

    try:
        return AeFactorTable(factors=factors)
    except ValidationError as e:
        raise log.fatal(name, None, e.errors()[0]["msg"])


def load_regions(path: PathLike, log: Optional[IssueLog] = None) -> Dict[str, str]:
    log = log or IssueLog()
    name, rows, _ = _read_table(path, schemas.REGIONS, log)
    regions: Dict[str, str] = {}
    for row_number, row in rows:
        if not row["region_id"]:
            log.reject(name, row_number, "blank region_id")
            continue
        if row["region_id"] in regions:
            log.reject(name, row_number, f"duplicate region_id {row['region_id']!r}")
            continue
        regions[row["region_id"]] = row["label"]
    return dict(sorted(regions.items()))


# Price Loader ------------------------------------------------------------------

def load_prices(
    path: PathLike,
    log: Optional[IssueLog] = None,
    known_items: Optional[Collection[str]] = None,
) -> List[PriceObservation]:
    """Load retail prices normalized to currency per gram as purchased."""
    log = log or IssueLog()
    name, rows, _ = _read_table(path, schemas.PRICES, log)
    observations: List[PriceObservation] = []

    for row_number, row in rows:
        # 1️⃣ Identify the observation ----
        if not row["item_id"] or not row["location_id"]:
            log.reject(name, row_number, "blank item_id or location_id")
            continue
        if known_items is not None and row["item_id"] not in known_items:
            log.unmatched_items.add(row["item_id"])
            log.reject(name, row_number, f"unknown item_id {row['item_id']!r}")
            continue
        year, month = _parse_int(row["year"]), _parse_int(row["month"])
        if year is None or month is None or not 1 <= month <= 12:
            log.reject(name, row_number, f"invalid period {row['year']!r}-{row['month']!r}")
            continue

        # 2️⃣ Parse and normalize the price ----
        price = _parse_decimal(row["price"])
        if price is None:
            log.reject(name, row_number, f"unparseable price {row['price']!r}")
            continue
        if price <= 0:
            log.reject(name, row_number, f"non-positive price {row['price']!r}")
            continue
        try:
            per_gram = price_per_gram(price, row["unit"].lower())
        except ValueError as e:
            log.reject(name, row_number, str(e))
            continue

        observations.append(PriceObservation(
            item_id=row["item_id"],
            location_id=row["location_id"],
            period=f"{year:04d}-{month:02d}",
            price=per_gram,
        ))

    observations.sort(key=lambda o: (o.period, o.location_id, o.item_id, o.price))
    logger.info("Prices loaded", extra={"file": name, "observations": len(observations)})
    return observations


# Household Loader --------------------------------------------------------------

def load_households(
    households_path: PathLike,
    members_path: PathLike,
    consumption_path: PathLike,
    log: Optional[IssueLog] = None,
    known_items: Optional[Collection[str]] = None,
) -> List[Household]:
    """Load the roster, members and consumption records, grouped per household."""
    log = log or IssueLog()

    # 1️⃣ Household rows ----
    name, rows, columns = _read_table(households_path, schemas.HOUSEHOLDS, log)
    has_total = "total_expenditure" in columns
    has_rural = "rural" in columns
    heads: Dict[str, Dict] = {}
    for row_number, row in rows:
        household_id = row["household_id"]
        if not household_id:
            log.reject(name, row_number, "blank household_id")
            continue
        if household_id in heads:
            raise log.fatal(name, row_number, f"duplicate household_id {household_id!r}")
        weight = _parse_float(row["weight"])
        period_days = _parse_int(row["period_days"])
        if weight is None or weight <= 0:
            log.reject(name, row_number, f"sampling weight must be positive, got {row['weight']!r}")
            continue
        if period_days is None or period_days <= 0:
            log.reject(name, row_number, f"period_days must be a positive integer, got {row['period_days']!r}")
            continue
        head = {
            "household_id": household_id,
            "location_id": row["location_id"],
            "region_id": row["region_id"],
            "sampling_weight": weight,
            "period_days": period_days,
            "row": row_number,
        }
        if has_total and row["total_expenditure"]:
            total = _parse_decimal(row["total_expenditure"])
            if total is None or total < 0:
                log.warn(name, row_number, f"invalid total_expenditure {row['total_expenditure']!r}; ignored")
            else:
                head["total_expenditure"] = total
        if has_rural and row["rural"]:
            head["rural"] = _parse_bool(row["rural"])
        heads[household_id] = head

    # 2️⃣ Member rows ----
    members_name, member_rows, _ = _read_table(members_path, schemas.MEMBERS, log)
    members: Dict[str, List[Member]] = {household_id: [] for household_id in heads}
    for row_number, row in member_rows:
        if row["household_id"] not in heads:
            log.reject(members_name, row_number, f"member of unknown household {row['household_id']!r}")
            continue
        age = _parse_int(row["age_years"])
        try:
            members[row["household_id"]].append(Member(age_years=age, sex=row["sex"].lower()))
        except ValidationError:
            log.reject(members_name, row_number, f"invalid member age {row['age_years']!r} or sex {row['sex']!r}")

    # 3️⃣ Consumption rows ----
    consumption_name, consumption_rows, _ = _read_table(consumption_path, schemas.CONSUMPTION, log)
    records: Dict[str, List[ConsumptionRecord]] = {household_id: [] for household_id in heads}
    for row_number, row in consumption_rows:
        if row["household_id"] not in heads:
            log.reject(consumption_name, row_number, f"orphan consumption row for unknown household {row['household_id']!r}")
            continue
        if known_items is not None and row["item_id"] not in known_items:
            log.unmatched_items.add(row["item_id"])
            log.reject(consumption_name, row_number, f"unknown item_id {row['item_id']!r}")
            continue
        quantity = _parse_float(row["quantity_g"])
        expenditure = _parse_decimal(row["expenditure"])
        if quantity is None or expenditure is None:
            log.reject(consumption_name, row_number, "unparseable quantity_g or expenditure")
            continue
        try:
            records[row["household_id"]].append(
                ConsumptionRecord(item_id=row["item_id"], quantity=quantity, expenditure=expenditure)
            )
        except ValidationError as e:
            log.reject(consumption_name, row_number, e.errors()[0]["msg"])

    # 4️⃣ Assemble households ----
    households: List[Household] = []
    for household_id in sorted(heads):
        head = dict(heads[household_id])
        row_number = head.pop("row")
        if not members[household_id]:
            raise log.fatal(name, row_number, f"household {household_id!r} has no members")
        households.append(Household(
            **head,
            members=members[household_id],
            records=sorted(records[household_id], key=lambda r: (r.item_id, r.quantity, r.expenditure)),
        ))

    logger.info("Households loaded", extra={"households": len(households)})
    return households
