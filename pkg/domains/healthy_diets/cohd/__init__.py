"""Phase 1: least-cost healthy diets per location and their geography."""

from .pricing import build_price_tables, latest_period, region_pool
from .selection import (
    basket_item_shares,
    cohd_all,
    cohd_location,
    cost_shares,
    costed_groups,
    least_cost_selection,
)
from .summary import summarize_costs

__all__ = [
    "basket_item_shares",
    "build_price_tables",
    "cohd_all",
    "cohd_location",
    "cost_shares",
    "costed_groups",
    "latest_period",
    "least_cost_selection",
    "region_pool",
    "summarize_costs",
]
