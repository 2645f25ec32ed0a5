# ==============================================================================
# pricing.py — Location price tables in cost per edible kilocalorie
# ==============================================================================
# Purpose: Convert one month's prices into ranked per-group item lists per location
# Sections: Imports, Period Selection, Price Tables, Regional Pools
# ==============================================================================

# Standard Library --------------------------------------------------------------
import logging
from collections import defaultdict
from decimal import Decimal
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

# Core (App-wide) ---------------------------------------------------------------
from core.types.errors import NonConvertibleError
from core.types.models import (
    GUIDELINE_GROUPS,
    Dataset,
    FoodGroup,
    LocationPriceTable,
    PricedItem,
    PriceObservation,
)
from core.utils.units import price_per_kcal

# Configure logging
logger = logging.getLogger(__name__)


def latest_period(prices: Iterable[PriceObservation]) -> Optional[str]:
    periods = {obs.period for obs in prices}
    return max(periods) if periods else None


def build_price_tables(dataset: Dataset, period: Optional[str] = None) -> Dict[str, LocationPriceTable]:
    """Cost per edible kcal of every priced guideline-group item, per location."""
    period = period or latest_period(dataset.prices)

    # 1️⃣ Keep the cheapest observation per (location, item) ----
    cheapest: Dict[Tuple[str, str], PriceObservation] = {}
    for obs in dataset.prices:
        if obs.period != period or dataset.items[obs.item_id].group not in GUIDELINE_GROUPS:
            continue
        key = (obs.location_id, obs.item_id)
        if key in cheapest:
            logger.warning("Duplicate price; keeping the minimum", extra={"location_id": obs.location_id, "item_id": obs.item_id, "period": period})
            if obs.price >= cheapest[key].price:
                continue
        cheapest[key] = obs

    # 2️⃣ Convert to cost per kcal and group ----
    grouped: Dict[str, Dict[FoodGroup, List[PricedItem]]] = {
        location_id: defaultdict(list) for location_id in dataset.location_ids()
    }
    for (location_id, item_id), obs in sorted(cheapest.items()):
        composition = dataset.composition_of(item_id)
        if composition is None:
            continue
        try:
            cost = price_per_kcal(obs, composition)
        except NonConvertibleError as e:
            logger.warning("Item unusable for CoHD", extra={"item_id": item_id, "error": str(e)})
            continue
        grouped[location_id][dataset.items[item_id].group].append(PricedItem(item_id=item_id, cost_per_kcal=cost))

    return {
        location_id: LocationPriceTable(location_id=location_id, groups=dict(groups))
        for location_id, groups in sorted(grouped.items())
    }


def region_pool(
    tables: Mapping[str, LocationPriceTable],
    location_regions: Mapping[str, str],
    region_id: str,
) -> LocationPriceTable:
    """Cheapest cost per kcal of every item observed anywhere in a region."""
    best: Dict[FoodGroup, Dict[str, Decimal]] = defaultdict(dict)
    for location_id, table in tables.items():
        if location_regions.get(location_id) != region_id:
            continue
        for group, items in table.groups.items():
            for priced in items:
                current = best[group].get(priced.item_id)
                if current is None or priced.cost_per_kcal < current:
                    best[group][priced.item_id] = priced.cost_per_kcal
    return LocationPriceTable(
        location_id=f"region:{region_id}",
        groups={
            group: [PricedItem(item_id=i, cost_per_kcal=c) for i, c in items.items()]
            for group, items in best.items()
        },
    )


def merge_for_group(local: LocationPriceTable, pool: LocationPriceTable, group: FoodGroup) -> LocationPriceTable:
    """Local items plus pool items not priced locally; local prices win."""
    local_items = local.items_for(group)
    local_ids = {p.item_id for p in local_items}
    borrowed = [p for p in pool.items_for(group) if p.item_id not in local_ids]
    return LocationPriceTable(location_id=local.location_id, groups={group: local_items + borrowed})
