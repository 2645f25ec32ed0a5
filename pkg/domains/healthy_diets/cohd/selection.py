# ==============================================================================
# selection.py — Rank-order least-cost healthy diet
# ==============================================================================
# Purpose: Pick the k cheapest items per group and cost the guideline diet per location
# Sections: Imports, Group Selection, Location Basket, All Locations, Basket Views
# ==============================================================================

# Standard Library --------------------------------------------------------------
import logging
from concurrent.futures import ThreadPoolExecutor
from decimal import Decimal
from typing import Dict, List, Mapping, Optional, Tuple

# Core (App-wide) ---------------------------------------------------------------
from core.types.errors import InsufficientItemsError
from core.types.models import (
    RECOMMENDED_GROUPS,
    CohdOptions,
    Dataset,
    DietBasket,
    FoodGroup,
    GuidelineSet,
    LocationPriceTable,
    SelectedItem,
)
from core.utils.units import to_currency, to_decimal

# Internal domain modules
from domains.healthy_diets.common.shares import weighted_item_shares

# Internal (Current Module) -----------------------------------------------------
from .pricing import build_price_tables, merge_for_group, region_pool

# Configure logging
logger = logging.getLogger(__name__)


def least_cost_selection(
    table: LocationPriceTable,
    group: FoodGroup,
    guideline: GuidelineSet,
) -> Tuple[List[SelectedItem], Decimal]:
    """Select the k cheapest items and split the group's energy target equally among them."""
    k = guideline.item_count(group)
    target = to_decimal(guideline.target(group))
    if k == 0 or target == 0:
        return [], to_currency(0)

    candidates = table.items_for(group)
    if len(candidates) < k:
        raise InsufficientItemsError(group, len(candidates), k, table.location_id)

    chosen = candidates[:k]
    energy_each = target / k
    selected = [
        SelectedItem(
            item_id=priced.item_id,
            energy_kcal=energy_each,
            energy_share=1.0 / k,
            cost_per_kcal=priced.cost_per_kcal,
            cost=energy_each * priced.cost_per_kcal,
        )
        for priced in chosen
    ]
    group_cost = to_currency(target * sum((p.cost_per_kcal for p in chosen), Decimal(0)) / k)
    return selected, group_cost


def costed_groups(options: CohdOptions) -> Tuple[FoodGroup, ...]:
    if options.include_discretionary:
        return RECOMMENDED_GROUPS + (FoodGroup.DISCRETIONARY,)
    return RECOMMENDED_GROUPS


def cohd_location(
    dataset: Dataset,
    location_id: str,
    options: Optional[CohdOptions] = None,
    tables: Optional[Mapping[str, LocationPriceTable]] = None,
    pool: Optional[LocationPriceTable] = None,
) -> DietBasket:
    """Least-cost healthy diet at one location; shortfalls make the basket incomplete."""
    options = options or CohdOptions()
    if tables is None:
        tables = build_price_tables(dataset, options.period)
    table = tables.get(location_id) or LocationPriceTable(location_id=location_id, groups={})
    if pool is None and options.fallback_parent_region:
        pool = region_pool(tables, dataset.location_regions(), options.fallback_parent_region)

    group_costs: Dict[FoodGroup, Decimal] = {}
    selected: Dict[FoodGroup, List[SelectedItem]] = {}
    missing: List[FoodGroup] = []
    borrowed: List[FoodGroup] = []

    for group in costed_groups(options):
        try:
            selected[group], group_costs[group] = least_cost_selection(table, group, dataset.guideline)
            continue
        except InsufficientItemsError as shortfall:
            logger.info("Group insufficient at location", extra={"location_id": location_id, "group": group.value, "available": shortfall.available, "required": shortfall.required})

        # Borrow from the configured parent region when enabled
        if pool is not None:
            try:
                merged = merge_for_group(table, pool, group)
                selected[group], group_costs[group] = least_cost_selection(merged, group, dataset.guideline)
                borrowed.append(group)
                continue
            except InsufficientItemsError:
                pass
        missing.append(group)

    return DietBasket(
        location_id=location_id,
        group_costs=group_costs,
        selected=selected,
        total_cost=sum(group_costs.values(), Decimal(0)),
        complete=not missing,
        missing_groups=missing,
        borrowed_groups=borrowed,
    )


def cohd_all(dataset: Dataset, options: Optional[CohdOptions] = None, threads: int = 1) -> Dict[str, DietBasket]:
    """One basket per priced location, keyed and ordered by location_id."""
    options = options or CohdOptions()
    tables = build_price_tables(dataset, options.period)
    pool = None
    if options.fallback_parent_region:
        pool = region_pool(tables, dataset.location_regions(), options.fallback_parent_region)
    locations = sorted(tables)

    def _one(location_id: str) -> DietBasket:
        return cohd_location(dataset, location_id, options, tables=tables, pool=pool)

    if threads > 1 and len(locations) > 1:
        with ThreadPoolExecutor(max_workers=threads) as executor:
            baskets = list(executor.map(_one, locations))
    else:
        baskets = [_one(location_id) for location_id in locations]

    incomplete = sum(1 for b in baskets if not b.complete)
    logger.info("CoHD computed", extra={"locations": len(baskets), "incomplete": incomplete})
    return dict(zip(locations, baskets))


def cost_shares(basket: DietBasket) -> Dict[FoodGroup, float]:
    """Each group's share of the basket's total cost."""
    if basket.total_cost == 0:
        return {group: 0.0 for group in basket.group_costs}
    return {group: float(cost / basket.total_cost) for group, cost in basket.group_costs.items()}


def basket_item_shares(
    baskets: Mapping[str, DietBasket],
    weights: Optional[Mapping[str, float]] = None,
) -> Tuple[Dict[FoodGroup, Dict[str, float]], List[FoodGroup]]:
    """Weighted mean item energy shares across least-cost diets, weights keyed by location."""
    entries = []
    for location_id in sorted(baskets):
        weight = 1.0 if weights is None else weights.get(location_id, 0.0)
        if weight <= 0:
            continue
        basket = baskets[location_id]
        energy = {
            group: {item.item_id: float(item.energy_kcal) for item in items}
            for group, items in basket.selected.items()
        }
        entries.append((weight, energy))
    return weighted_item_shares(entries)
