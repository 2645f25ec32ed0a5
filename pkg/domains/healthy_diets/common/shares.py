# ==============================================================================
# shares.py — Weighted within-group energy shares
# ==============================================================================
# Purpose: Average item energy shares within each food group across weighted diets
# Sections: Imports, Share Aggregation
# ==============================================================================

# Standard Library --------------------------------------------------------------
import logging
from collections import defaultdict
from typing import Dict, Iterable, List, Mapping, Tuple

# Core (App-wide) ---------------------------------------------------------------
from core.types.models import FoodGroup

# Configure logging
logger = logging.getLogger(__name__)

GroupEnergy = Mapping[FoodGroup, Mapping[str, float]]


def weighted_item_shares(
    entries: Iterable[Tuple[float, GroupEnergy]],
) -> Tuple[Dict[FoodGroup, Dict[str, float]], List[FoodGroup]]:
    """Weighted mean of each item's share of its group's energy.

    Each entry is (weight, {group: {item_id: kcal}}). A diet contributes to a
    group only when it has positive energy in that group, so shares within a
    group sum to 1. Groups with no energy in any diet are returned as omitted.
    """
    totals: Dict[FoodGroup, Dict[str, float]] = defaultdict(lambda: defaultdict(float))
    group_weight: Dict[FoodGroup, float] = defaultdict(float)
    seen: set = set()

    for weight, energy in entries:
        for group, items in energy.items():
            seen.add(group)
            group_total = sum(items.values())
            if group_total <= 0:
                continue
            group_weight[group] += weight
            for item_id, kcal in items.items():
                if kcal > 0:
                    totals[group][item_id] += weight * kcal / group_total

    shares: Dict[FoodGroup, Dict[str, float]] = {}
    for group in sorted(totals, key=lambda g: list(FoodGroup).index(g)):
        shares[group] = {item_id: value / group_weight[group] for item_id, value in sorted(totals[group].items())}

    omitted = sorted((g for g in seen if g not in shares), key=lambda g: list(FoodGroup).index(g))
    for group in omitted:
        logger.info("Group omitted from item shares: no energy in any diet", extra={"group": group.value})
    return shares, omitted
