# ==============================================================================
# quintiles.py — Expenditure quintiles over weighted households
# ==============================================================================
# Purpose: Rank households by per-capita (or per-AE) expenditure and cut weighted fifths
# Sections: Imports, Weights, Ranking Values, Quintile Assignment
# ==============================================================================

# Standard Library --------------------------------------------------------------
import logging
from decimal import Decimal
from fractions import Fraction
from typing import Collection, Dict, Optional, Sequence

# Core (App-wide) ---------------------------------------------------------------
from core.types.models import AeFactorTable, Household, QuintileOptions
from core.utils.units import adult_equivalents, to_decimal

# Configure logging
logger = logging.getLogger(__name__)


def household_weight(household: Household, weight_by: str = "persons") -> float:
    """Sampling weight expanded to persons, or the bare household weight."""
    return household.person_weight if weight_by == "persons" else household.sampling_weight


def household_weights(households: Sequence[Household], weight_by: str = "persons") -> Dict[str, float]:
    return {h.household_id: household_weight(h, weight_by) for h in households}


def food_expenditure(household: Household, excluded_items: Collection[str] = ()) -> Decimal:
    """Reported spending on food over the recall period, Excluded items left out."""
    return sum((r.expenditure for r in household.records if r.item_id not in excluded_items), Decimal(0))


def ranking_value(
    household: Household,
    options: QuintileOptions,
    ae_table: AeFactorTable,
    use_total: bool,
    excluded_items: Collection[str] = (),
) -> Decimal:
    spent = household.total_expenditure if use_total else food_expenditure(household, excluded_items)
    per_day = spent / household.period_days
    if options.rank_by == "perae":
        return per_day / to_decimal(adult_equivalents(household.members, ae_table))
    return per_day / household.size


def assign_quintiles(
    households: Sequence[Household],
    ae_table: AeFactorTable,
    options: Optional[QuintileOptions] = None,
    excluded_items: Collection[str] = (),
) -> Dict[str, int]:
    """Quintile 1..5 per household from the cumulative weight that precedes it.

    Households are ordered by ranking value, ties by household_id. A household
    whose preceding weight is c of a total W lands in quintile floor(5c/W) + 1.
    Total expenditure ranks when every household reports it; otherwise food
    spending ranks everyone.
    """
    options = options or QuintileOptions()
    if not households:
        return {}

    # 1️⃣ Ranking variable ----
    use_total = ranks_by_total(households)
    if not use_total:
        logger.warning("Total expenditure missing; ranking by food expenditure", extra={"households": len(households)})
    ranked = sorted(
        households,
        key=lambda h: (ranking_value(h, options, ae_table, use_total, excluded_items), h.household_id),
    )

    # 2️⃣ Exact cumulative weight cut ----
    weights = [Fraction(household_weight(h, options.weight_by)) for h in ranked]
    total = sum(weights, Fraction(0))
    quintiles: Dict[str, int] = {}
    preceding = Fraction(0)
    for household, weight in zip(ranked, weights):
        quintiles[household.household_id] = min(5, int(5 * preceding / total) + 1)
        preceding += weight

    logger.info("Quintiles assigned", extra={"households": len(quintiles), "rank_by": options.rank_by, "weight_by": options.weight_by})
    return dict(sorted(quintiles.items()))


def ranks_by_total(households: Sequence[Household]) -> bool:
    return bool(households) and all(h.total_expenditure is not None for h in households)
