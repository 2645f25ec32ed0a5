# ==============================================================================
# reports.py — Report tables for every emitted CSV file
# ==============================================================================
# Purpose: Flatten baskets, summaries, records and scores into sortable DataFrames
# Sections: Imports, Cost Reports, Affordability Reports, Adequacy Reports
# ==============================================================================

# Standard Library --------------------------------------------------------------
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

# Third Party -------------------------------------------------------------------
import pandas as pd

# Core (App-wide) ---------------------------------------------------------------
from core.types.models import (
    GUIDELINE_GROUPS,
    RECOMMENDED_GROUPS,
    AdequacyScores,
    AdjustedDiet,
    AffordabilityRecord,
    CohdSummary,
    DietBasket,
    FoodGroup,
    Household,
    NutrientId,
    RegionCostSummary,
)
from core.utils.units import format_currency

# Internal domain modules
from domains.healthy_diets.cohd import cost_shares

# CSV name -> leading id columns used for sorting
SORT_KEYS: Dict[str, Tuple[str, ...]] = {
    "cohd_by_location.csv": ("location_id",),
    "cohd_summary.csv": ("region_id",),
    "cohd_gaps.csv": ("household_id",),
    "affordability_by_household.csv": ("household_id",),
    "affordability_by_region.csv": ("region_id",),
    "table2.csv": ("population_group",),
    "figure3.csv": ("population_group",),
    "adequacy_by_household.csv": ("household_id",),
    "adequacy_distributions.csv": ("population_group", "indicator"),
    "adequacy_exclusions.csv": ("household_id",),
    "food_group_energy.csv": ("population_group", "food_group"),
    "item_shares.csv": ("population_group", "source", "food_group", "item_id"),
    "basket_adequacy.csv": ("location_id",),
}


def _joined(groups: Sequence[FoodGroup]) -> str:
    return ";".join(g.value for g in groups)


# Cost Reports ------------------------------------------------------------------

def cohd_by_location_frame(
    baskets: Mapping[str, DietBasket],
    location_regions: Mapping[str, str],
    period: Optional[str],
) -> pd.DataFrame:
    """One row per location: total, per-group cost and cost share, selected items."""
    rows: List[dict] = []
    for location_id, basket in sorted(baskets.items()):
        shares = cost_shares(basket) if basket.complete else {}
        row = {
            "location_id": location_id,
            "region_id": location_regions.get(location_id, ""),
            "period": period or "",
            "complete": basket.complete,
            "total_cost": format_currency(basket.total_cost) if basket.complete else "",
        }
        for group in GUIDELINE_GROUPS:
            cost = basket.group_costs.get(group)
            row[f"cost_{group.value}"] = format_currency(cost) if cost is not None else ""
        for group in GUIDELINE_GROUPS:
            row[f"share_{group.value}"] = shares.get(group, float("nan"))
        row["selected_items"] = ";".join(
            item.item_id for group in GUIDELINE_GROUPS for item in basket.selected.get(group, [])
        )
        row["missing_groups"] = _joined(basket.missing_groups)
        row["borrowed_groups"] = _joined(basket.borrowed_groups)
        rows.append(row)
    return pd.DataFrame(rows)


def _summary_row(summary: RegionCostSummary) -> dict:
    row = {
        "region_id": summary.region_id,
        "label": summary.label,
        "households": summary.households,
        "weighted_persons": summary.weighted_persons,
        "mean_cost": summary.mean_cost,
        "min_cost": summary.min_cost,
        "max_cost": summary.max_cost,
    }
    for group in GUIDELINE_GROUPS:
        row[f"mean_{group.value}"] = summary.group_means.get(group, float("nan"))
    return row


def cohd_summary_frame(summary: CohdSummary) -> pd.DataFrame:
    rows = [_summary_row(region) for region in summary.regions]
    if summary.national is not None:
        rows.append(_summary_row(summary.national))
    return pd.DataFrame(rows)


def cohd_gaps_frame(summary: CohdSummary) -> pd.DataFrame:
    return pd.DataFrame(
        [gap.model_dump() for gap in summary.gaps],
        columns=["household_id", "location_id", "reason"],
    )


# Affordability Reports ---------------------------------------------------------

def affordability_frame(records: Sequence[AffordabilityRecord], households: Sequence[Household]) -> pd.DataFrame:
    """Per-household spending, local CoHD and classification; food_share only when reported."""
    by_id = {h.household_id: h for h in households}
    with_share = any(r.food_share is not None for r in records)
    rows: List[dict] = []
    for record in records:
        household = by_id[record.household_id]
        row = {
            "household_id": record.household_id,
            "location_id": household.location_id,
            "region_id": household.region_id,
            "quintile": record.quintile,
            "spending_per_ae_day": format_currency(record.spending_per_ae_day),
            "local_cohd": format_currency(record.local_cohd) if record.local_cohd is not None else "",
            "can_afford": "" if record.can_afford is None else record.can_afford,
            "zero_spending": record.zero_spending,
            "excluded_reason": record.excluded_reason or "",
        }
        if with_share:
            row["food_share"] = record.food_share if record.food_share is not None else float("nan")
        rows.append(row)
    return pd.DataFrame(rows)


# Adequacy Reports --------------------------------------------------------------

def _score_columns(scores: AdequacyScores) -> dict:
    row = {f"nar_{n.value}": scores.nar[n] for n in NutrientId}
    row["mna"] = scores.mna
    row.update({f"fga_{g.value}": scores.group_adequacy[g] for g in RECOMMENDED_GROUPS})
    row["mfga"] = scores.mfga
    return row


def adequacy_frame(diets: Mapping[str, AdjustedDiet], scores: Mapping[str, AdequacyScores]) -> pd.DataFrame:
    rows: List[dict] = []
    for household_id in sorted(scores):
        diet = diets[household_id]
        row = {
            "household_id": household_id,
            "adult_equivalents": diet.adult_equivalents,
            "adjustment_factor": diet.adjustment_factor,
        }
        row.update(_score_columns(scores[household_id]))
        row["discretionary_kcal"] = scores[household_id].discretionary_kcal
        row["mixed_dish_kcal"] = scores[household_id].mixed_dish_kcal
        rows.append(row)
    return pd.DataFrame(rows)


def basket_adequacy_frame(scores: Mapping[str, AdequacyScores]) -> pd.DataFrame:
    return pd.DataFrame([
        {"location_id": location_id, **_score_columns(scores[location_id])}
        for location_id in sorted(scores)
    ])


def exclusions_frame(exclusions: Sequence[Tuple[str, str]]) -> pd.DataFrame:
    return pd.DataFrame(list(exclusions), columns=["household_id", "reason"])


def item_shares_frame(
    reported: Mapping[str, Mapping[FoodGroup, Mapping[str, float]]],
    least_cost: Mapping[str, Mapping[FoodGroup, Mapping[str, float]]],
) -> pd.DataFrame:
    """One row per population group, source, food group and item."""
    rows = [
        {"population_group": label, "source": source, "food_group": group.value, "item_id": item_id, "share": share}
        for source, by_label in (("reported", reported), ("least_cost", least_cost))
        for label, shares in by_label.items()
        for group, items in shares.items()
        for item_id, share in items.items()
    ]
    return pd.DataFrame(rows, columns=["population_group", "source", "food_group", "item_id", "share"])
