# ==============================================================================
# spending.py — Energy-adjusted food spending and affordability
# ==============================================================================
# Purpose: Spending per adult equivalent per day, compared with the local CoHD
# Sections: Imports, Spending, Classification, Household Records
# ==============================================================================

# Standard Library --------------------------------------------------------------
import logging
from decimal import Decimal
from typing import Collection, List, Mapping, Optional

# Core (App-wide) ---------------------------------------------------------------
from core.types.models import AdjustedDiet, AffordabilityRecord, DietBasket, Household
from core.utils.units import to_currency, to_decimal

# Internal (Current Module) -----------------------------------------------------
from .quintiles import food_expenditure

# Configure logging
logger = logging.getLogger(__name__)


def spending_per_ae(household: Household, diet: AdjustedDiet, excluded_items: Collection[str] = ()) -> Decimal:
    """(food spending / period_days / adult equivalents) x adjustment factor, in currency."""
    spent = food_expenditure(household, excluded_items)
    per_day_ae = spent / household.period_days / to_decimal(diet.adult_equivalents)
    return to_currency(per_day_ae * to_decimal(diet.adjustment_factor))


def classify(spending: Decimal, cohd: Decimal) -> bool:
    """Affordable unless the cost strictly exceeds spending."""
    return spending >= cohd


def _food_share(household: Household, excluded_items: Collection[str]) -> Optional[float]:
    if household.total_expenditure is None or household.total_expenditure <= 0:
        return None
    return float(food_expenditure(household, excluded_items) / household.total_expenditure)


def affordability_records(
    households: List[Household],
    diets: Mapping[str, AdjustedDiet],
    baskets: Mapping[str, DietBasket],
    quintiles: Mapping[str, int],
    excluded_items: Collection[str] = (),
    diet_exclusions: Optional[Mapping[str, str]] = None,
) -> List[AffordabilityRecord]:
    """One record per quintiled household; incomplete baskets and unadjustable diets are excluded.

    `diet_exclusions` maps household_id to the reason its diet could not be adjusted.
    """
    diet_exclusions = diet_exclusions or {}
    records: List[AffordabilityRecord] = []

    for household in sorted(households, key=lambda h: h.household_id):
        if household.household_id not in quintiles:
            continue
        spent = food_expenditure(household, excluded_items)
        record = {
            "household_id": household.household_id,
            "quintile": quintiles[household.household_id],
            "food_share": _food_share(household, excluded_items),
            "zero_spending": spent == 0,
        }

        # 1️⃣ Spending needs the household's adjustment factor ----
        diet = diets.get(household.household_id)
        if diet is None:
            records.append(AffordabilityRecord(
                **record, spending_per_ae_day=to_currency(spent / household.period_days),
                excluded_reason=diet_exclusions.get(household.household_id, "no adjusted diet"),
            ))
            continue
        spending = spending_per_ae(household, diet, excluded_items)

        # 2️⃣ Compare only against complete local baskets ----
        basket = baskets.get(household.location_id)
        if basket is None or not basket.complete:
            reason = "no basket at location" if basket is None else "incomplete basket: " + ",".join(g.value for g in basket.missing_groups)
            records.append(AffordabilityRecord(**record, spending_per_ae_day=spending, excluded_reason=reason))
            continue

        records.append(AffordabilityRecord(
            **record,
            spending_per_ae_day=spending,
            local_cohd=basket.total_cost,
            can_afford=classify(spending, basket.total_cost),
        ))

    excluded = sum(1 for r in records if r.excluded_reason)
    unaffordable = sum(1 for r in records if r.can_afford is False)
    logger.info("Affordability classified", extra={"households": len(records), "excluded": excluded, "unaffordable": unaffordable})
    return records


def unaffordable_ids(records: List[AffordabilityRecord]) -> List[str]:
    return [r.household_id for r in records if r.can_afford is False]
