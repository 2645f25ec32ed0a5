"""Phase 2: food spending per adult equivalent, affordability and expenditure quintiles."""

from .quintiles import (
    assign_quintiles,
    food_expenditure,
    household_weight,
    household_weights,
    ranking_value,
    ranks_by_total,
)
from .spending import affordability_records, classify, spending_per_ae, unaffordable_ids
from .tables import LEAST_COST, affordability_by_region, descriptive_table, spending_decomposition

__all__ = [
    "LEAST_COST",
    "affordability_by_region",
    "affordability_records",
    "assign_quintiles",
    "classify",
    "descriptive_table",
    "food_expenditure",
    "household_weight",
    "household_weights",
    "ranking_value",
    "ranks_by_total",
    "spending_decomposition",
    "spending_per_ae",
    "unaffordable_ids",
]
