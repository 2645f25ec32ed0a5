# ==============================================================================
# adjustment.py — Energy adjustment of reported household diets
# ==============================================================================
# Purpose: Rescale reported consumption per adult equivalent to the reference energy
# Sections: Imports, Composition Lookup, Household Adjustment, Readjustment, Modeled Diets
# ==============================================================================

# Standard Library --------------------------------------------------------------
import logging
from collections import defaultdict
from decimal import Decimal
from typing import Dict, List, Mapping, Optional, Tuple

# Core (App-wide) ---------------------------------------------------------------
from core.config.settings import settings
from core.types.errors import UnresolvedItemError, ZeroEnergyError
from core.types.models import (
    CONSUMED_GROUPS,
    AdjustedDiet,
    AdjustedItem,
    AeFactorTable,
    CompositionRecord,
    Dataset,
    DietBasket,
    FoodGroup,
    FoodItem,
    Household,
)
from core.utils.units import adult_equivalents, to_decimal

# Configure logging
logger = logging.getLogger(__name__)


def resolve_composition(
    item_id: str,
    items: Mapping[str, FoodItem],
    compositions: Mapping[str, CompositionRecord],
) -> CompositionRecord:
    item = items.get(item_id)
    if item is None or item.composition_key is None or item.composition_key not in compositions:
        raise UnresolvedItemError(item_id)
    return compositions[item.composition_key]


def _group_energy(adjusted: List[AdjustedItem]) -> Dict[FoodGroup, float]:
    energy = {group: 0.0 for group in CONSUMED_GROUPS}
    for item in adjusted:
        energy[item.group] += item.energy_kcal
    return energy


def _aggregate_records(household: Household) -> Dict[str, Tuple[float, Decimal]]:
    """Repeated item rows in one household are summed."""
    totals: Dict[str, Tuple[float, Decimal]] = defaultdict(lambda: (0.0, Decimal(0)))
    for record in household.records:
        quantity, spent = totals[record.item_id]
        totals[record.item_id] = (quantity + record.quantity, spent + record.expenditure)
    return dict(sorted(totals.items()))


def energy_adjust(
    household: Household,
    items: Mapping[str, FoodItem],
    compositions: Mapping[str, CompositionRecord],
    ae_table: AeFactorTable,
    reference_kcal: Optional[float] = None,
) -> AdjustedDiet:
    """Scale a household's daily per-AE diet so its energy equals the reference level.

    Every item is multiplied by the same factor, so item energy ratios are kept.
    Excluded items carry no composition and are left out. Spending is scaled by
    the same factor as quantities.
    """
    reference_kcal = reference_kcal or settings.reference_energy_kcal

    # 1️⃣ Household size in adult equivalents ----
    ae = adult_equivalents(household.members, ae_table)
    per_day_ae = household.period_days * ae

    # 2️⃣ Reported daily energy per AE, item by item ----
    reported: List[Tuple[str, FoodGroup, float, float, float, Decimal]] = []
    for item_id, (quantity, spent) in _aggregate_records(household).items():
        item = items.get(item_id)
        if item is None:
            raise UnresolvedItemError(item_id)
        if item.group == FoodGroup.EXCLUDED:
            continue
        composition = resolve_composition(item_id, items, compositions)
        grams = quantity / per_day_ae
        edible = grams * composition.edible_fraction
        kcal = edible * composition.energy_density / 100.0
        reported.append((item_id, item.group, kcal, grams, edible, spent))

    total = sum(kcal for _, _, kcal, _, _, _ in reported)
    if total <= 0:
        raise ZeroEnergyError(household.household_id)

    # 3️⃣ Single scaling factor applied to energy, grams and spending ----
    factor = reference_kcal / total
    spend_scale = to_decimal(factor) / (household.period_days * to_decimal(ae))
    adjusted = [
        AdjustedItem(
            item_id=item_id,
            group=group,
            reported_energy_kcal=kcal,
            energy_kcal=kcal * factor,
            grams=grams * factor,
            edible_grams=edible * factor,
            expenditure=float(spent * spend_scale),
        )
        for item_id, group, kcal, grams, edible, spent in reported
    ]

    logger.debug("Diet energy-adjusted", extra={"household_id": household.household_id, "factor": factor, "adult_equivalents": ae})
    return AdjustedDiet(
        household_id=household.household_id,
        adult_equivalents=ae,
        items=adjusted,
        group_energy=_group_energy(adjusted),
        total_energy=sum(item.energy_kcal for item in adjusted),
        adjustment_factor=factor,
    )


def readjust(diet: AdjustedDiet, reference_kcal: Optional[float] = None) -> AdjustedDiet:
    """Adjust an already adjusted diet again; adjustment_factor holds the new factor only."""
    reference_kcal = reference_kcal or settings.reference_energy_kcal
    if diet.total_energy <= 0:
        raise ZeroEnergyError(diet.household_id)

    factor = reference_kcal / diet.total_energy
    items = [
        item.model_copy(update={
            "reported_energy_kcal": item.energy_kcal,
            "energy_kcal": item.energy_kcal * factor,
            "grams": item.grams * factor,
            "edible_grams": item.edible_grams * factor,
            "expenditure": item.expenditure * factor,
        })
        for item in diet.items
    ]
    return diet.model_copy(update={
        "items": items,
        "group_energy": _group_energy(items),
        "total_energy": sum(item.energy_kcal for item in items),
        "adjustment_factor": factor,
    })


def basket_diet(basket: DietBasket, dataset: Dataset) -> AdjustedDiet:
    """The least-cost diet of a location as one adult equivalent's daily intake.

    The modeled diet already meets the guideline energy, so it is not rescaled;
    without the discretionary allowance it sits below the reference level.
    """
    items: List[AdjustedItem] = []
    for group, selected in basket.selected.items():
        for chosen in selected:
            composition = resolve_composition(chosen.item_id, dataset.items, dataset.compositions)
            kcal = float(chosen.energy_kcal)
            edible = kcal * 100.0 / composition.energy_density
            items.append(AdjustedItem(
                item_id=chosen.item_id,
                group=group,
                reported_energy_kcal=kcal,
                energy_kcal=kcal,
                grams=edible / composition.edible_fraction,
                edible_grams=edible,
                expenditure=float(chosen.cost),
            ))
    items.sort(key=lambda item: (list(FoodGroup).index(item.group), item.item_id))
    return AdjustedDiet(
        household_id=basket.location_id,
        adult_equivalents=1.0,
        items=items,
        group_energy=_group_energy(items),
        total_energy=sum(item.energy_kcal for item in items),
        adjustment_factor=1.0,
    )
