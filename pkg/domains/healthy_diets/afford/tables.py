# ==============================================================================
# tables.py — Weighted descriptive tables for affordability
# ==============================================================================
# Purpose: Quintile profile table, spending decomposition by food group, regional shares
# Sections: Imports, Helpers, Descriptive Table, Spending Decomposition, Regions
# ==============================================================================

# Standard Library --------------------------------------------------------------
import logging
from collections import defaultdict
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

# Third Party -------------------------------------------------------------------
import pandas as pd

# Core (App-wide) ---------------------------------------------------------------
from core.types.models import (
    CONSUMED_GROUPS,
    AdjustedDiet,
    AffordabilityRecord,
    DietBasket,
    FoodGroup,
    Household,
)
from core.utils.weighted_stats import weighted_mean, weighted_std

# Internal domain modules
from domains.healthy_diets.common import EVERYONE, population_groups

# Internal (Current Module) -----------------------------------------------------
from .spending import unaffordable_ids

# Configure logging
logger = logging.getLogger(__name__)

LEAST_COST = "least_cost"
NAN = float("nan")


def _indicator_pct(flags: Sequence[bool], flag_weights: Sequence[float]) -> Tuple[float, float]:
    """Weighted percentage of True flags and its standard deviation, both in percentage points."""
    if not flags:
        return NAN, NAN
    values = [1.0 if flag else 0.0 for flag in flags]
    return 100.0 * weighted_mean(values, flag_weights), 100.0 * weighted_std(values, flag_weights)


def _unable_pct(records: Sequence[AffordabilityRecord], weights: Mapping[str, float]) -> Tuple[float, float]:
    covered = [r for r in records if r.can_afford is not None]
    return _indicator_pct([not r.can_afford for r in covered], [weights[r.household_id] for r in covered])


def descriptive_table(
    records: Sequence[AffordabilityRecord],
    households: Sequence[Household],
    weights: Mapping[str, float],
) -> pd.DataFrame:
    """Per quintile, cannot_afford and all: weighted counts, household profile and share unable to afford.

    Rural and food-share columns appear only when the households carry them.
    """
    by_id = {h.household_id: h for h in households}
    by_record = {r.household_id: r for r in records}
    groups = population_groups({r.household_id: r.quintile for r in records}, unaffordable_ids(list(records)))
    total_weight = sum(weights[r.household_id] for r in records)
    has_rural = any(by_id[r.household_id].rural is not None for r in records)
    has_food_share = any(r.food_share is not None for r in records)

    rows: List[dict] = []
    for label, members in groups.items():
        if not members:
            continue
        member_weights = [weights[h] for h in members]
        sizes = [float(by_id[h].size) for h in members]
        row = {
            "population_group": label,
            "households": len(members),
            "weighted_count": sum(member_weights),
            "population_share_pct": 100.0 * sum(member_weights) / total_weight,
            "household_size_mean": weighted_mean(sizes, member_weights),
            "household_size_sd": weighted_std(sizes, member_weights),
        }
        if has_rural:
            rural = [h for h in members if by_id[h].rural is not None]
            row["rural_pct"], row["rural_sd"] = _indicator_pct(
                [bool(by_id[h].rural) for h in rural], [weights[h] for h in rural]
            )
        if has_food_share:
            shared = [h for h in members if by_record[h].food_share is not None]
            shares = [by_record[h].food_share for h in shared]
            shared_weights = [weights[h] for h in shared]
            row["food_share_mean"] = weighted_mean(shares, shared_weights) if shared else NAN
            row["food_share_sd"] = weighted_std(shares, shared_weights) if shared else NAN
        row["covered_households"] = sum(1 for h in members if by_record[h].can_afford is not None)
        row["unable_to_afford_pct"], row["unable_to_afford_sd"] = _unable_pct([by_record[h] for h in members], weights)
        rows.append(row)

    return pd.DataFrame(rows)


def spending_decomposition(
    records: Sequence[AffordabilityRecord],
    households: Sequence[Household],
    diets: Mapping[str, AdjustedDiet],
    baskets: Mapping[str, DietBasket],
    weights: Mapping[str, float],
) -> pd.DataFrame:
    """Weighted mean adjusted spending per AE per day by food group, with the least-cost benchmark row.

    Each row also carries the weighted mean local CoHD of its households.
    """
    by_id = {h.household_id: h for h in households}
    spending_groups = list(CONSUMED_GROUPS)
    covered = [r for r in records if r.household_id in diets]
    groups = population_groups({r.household_id: r.quintile for r in covered}, unaffordable_ids(list(covered)))
    cohd = {r.household_id: float(r.local_cohd) for r in covered if r.local_cohd is not None}

    def _row(label: str, members: List[str], per_group: Dict[FoodGroup, List[float]]) -> dict:
        member_weights = [weights[h] for h in members]
        row = {"population_group": label, "households": len(members)}
        for group in spending_groups:
            row[group.value] = weighted_mean(per_group[group], member_weights)
        row["total"] = sum(row[group.value] for group in spending_groups)
        priced = [h for h in members if h in cohd]
        row["average_cohd"] = weighted_mean([cohd[h] for h in priced], [weights[h] for h in priced]) if priced else NAN
        return row

    rows: List[dict] = []

    # 1️⃣ Least-cost benchmark over households with a complete local basket ----
    benchmark = [h for h in groups[EVERYONE] if h in cohd]
    if benchmark:
        per_group = {
            group: [float(baskets[by_id[h].location_id].group_costs.get(group, 0)) for h in benchmark]
            for group in spending_groups
        }
        rows.append(_row(LEAST_COST, benchmark, per_group))

    # 2️⃣ Reported spending per population group ----
    for label, members in groups.items():
        if not members:
            continue
        per_group: Dict[FoodGroup, List[float]] = {group: [] for group in spending_groups}
        for household_id in members:
            spent: Dict[FoodGroup, float] = defaultdict(float)
            for item in diets[household_id].items:
                spent[item.group] += item.expenditure
            for group in spending_groups:
                per_group[group].append(spent[group])
        rows.append(_row(label, members, per_group))

    return pd.DataFrame(rows)


def affordability_by_region(
    records: Sequence[AffordabilityRecord],
    households: Sequence[Household],
    weights: Mapping[str, float],
    region_names: Optional[Mapping[str, str]] = None,
) -> pd.DataFrame:
    """Weighted share unable to afford per region, with covered and excluded counts."""
    region_names = region_names or {}
    by_id = {h.household_id: h for h in households}
    by_region: Dict[str, List[AffordabilityRecord]] = defaultdict(list)
    for record in records:
        by_region[by_id[record.household_id].region_id].append(record)

    rows = []
    for region_id in sorted(by_region):
        members = by_region[region_id]
        covered = [r for r in members if r.can_afford is not None]
        rows.append({
            "region_id": region_id,
            "label": region_names.get(region_id, ""),
            "households": len(members),
            "covered_households": len(covered),
            "excluded_households": len(members) - len(covered),
            "weighted_count": sum(weights[r.household_id] for r in members),
            "unable_to_afford_pct": _unable_pct(members, weights)[0],
        })
    return pd.DataFrame(
        rows,
        columns=["region_id", "label", "households", "covered_households", "excluded_households", "weighted_count", "unable_to_afford_pct"],
    )
