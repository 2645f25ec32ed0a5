"""Helpers shared by the cost, affordability and adequacy phases."""

from .groups import CANNOT_AFFORD, EVERYONE, population_groups, quintile_label
from .shares import weighted_item_shares

__all__ = [
    "CANNOT_AFFORD",
    "EVERYONE",
    "population_groups",
    "quintile_label",
    "weighted_item_shares",
]
