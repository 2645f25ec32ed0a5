# ==============================================================================
# summary.py — Geographic summary of least-cost diet costs
# ==============================================================================
# Purpose: Population-weighted regional and national CoHD statistics
# Sections: Imports, Summaries
# ==============================================================================

# Standard Library --------------------------------------------------------------
import logging
from collections import defaultdict
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

# Core (App-wide) ---------------------------------------------------------------
from core.types.models import (
    CohdSummary,
    CoverageGap,
    DietBasket,
    FoodGroup,
    Household,
    RegionCostSummary,
)
from core.utils.weighted_stats import weighted_mean

# Configure logging
logger = logging.getLogger(__name__)

NATIONAL_ID = "ALL"


def _summarize(region_id: str, label: str, entries: Sequence[Tuple[float, DietBasket]]) -> RegionCostSummary:
    weights = [w for w, _ in entries]
    costs = [float(b.total_cost) for _, b in entries]
    groups = sorted({g for _, b in entries for g in b.group_costs}, key=lambda g: list(FoodGroup).index(g))
    return RegionCostSummary(
        region_id=region_id,
        label=label,
        households=len(entries),
        weighted_persons=sum(weights),
        mean_cost=weighted_mean(costs, weights),
        min_cost=min(costs),
        max_cost=max(costs),
        group_means={
            g: weighted_mean([float(b.group_costs.get(g, 0)) for _, b in entries], weights)
            for g in groups
        },
    )


def summarize_costs(
    baskets: Mapping[str, DietBasket],
    households: Sequence[Household],
    region_names: Optional[Mapping[str, str]] = None,
) -> CohdSummary:
    """Regional means weighted by persons (sampling weight x members), with min and max."""
    region_names = region_names or {}
    by_region: Dict[str, List[Tuple[float, DietBasket]]] = defaultdict(list)
    gaps: List[CoverageGap] = []

    # 1️⃣ Attach each household to its local basket ----
    for household in sorted(households, key=lambda h: h.household_id):
        basket = baskets.get(household.location_id)
        if basket is None:
            gaps.append(CoverageGap(household_id=household.household_id, location_id=household.location_id, reason="no basket at location"))
            continue
        if not basket.complete:
            missing = ",".join(g.value for g in basket.missing_groups)
            gaps.append(CoverageGap(household_id=household.household_id, location_id=household.location_id, reason=f"incomplete basket: {missing}"))
            continue
        by_region[household.region_id].append((household.person_weight, basket))

    if gaps:
        logger.info("Households excluded from cost summary", extra={"gaps": len(gaps)})

    # 2️⃣ Region and national rows ----
    regions = [
        _summarize(region_id, region_names.get(region_id, ""), entries)
        for region_id, entries in sorted(by_region.items())
    ]
    everyone = [entry for region_id in sorted(by_region) for entry in by_region[region_id]]
    national = _summarize(NATIONAL_ID, "National", everyone) if everyone else None
    return CohdSummary(regions=regions, national=national, gaps=gaps)
