"""Phase 3: energy-adjusted diets, nutrient and food-group adequacy."""

from .adjustment import basket_diet, energy_adjust, readjust, resolve_composition
from .aggregation import adequacy_distributions, food_group_energy, item_energy_shares, item_shares_by_group
from .scoring import (
    food_group_ratios,
    nutrient_ratios,
    nutrient_totals,
    score_diet,
    score_food_groups,
    score_household,
    score_households,
    score_nutrients,
)

__all__ = [
    "adequacy_distributions",
    "basket_diet",
    "energy_adjust",
    "food_group_energy",
    "food_group_ratios",
    "item_energy_shares",
    "item_shares_by_group",
    "nutrient_ratios",
    "nutrient_totals",
    "readjust",
    "resolve_composition",
    "score_diet",
    "score_food_groups",
    "score_household",
    "score_households",
    "score_nutrients",
]
