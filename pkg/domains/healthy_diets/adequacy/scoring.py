# ==============================================================================
# scoring.py — Nutrient and food-group adequacy scores
# ==============================================================================
# Purpose: NAR/MNA from nutrient intakes and MFGA from group energies per household
# Sections: Imports, Nutrients, Food Groups, Household Scoring, Batch Scoring
# ==============================================================================

# Standard Library --------------------------------------------------------------
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

# Core (App-wide) ---------------------------------------------------------------
from core.types.errors import LookupFailure, ZeroEnergyError
from core.types.models import (
    RECOMMENDED_GROUPS,
    AdequacyScores,
    AdjustedDiet,
    CompositionRecord,
    Dataset,
    FoodGroup,
    FoodItem,
    GuidelineSet,
    Household,
    NutrientId,
    NutrientReferenceSet,
)

# Internal (Current Module) -----------------------------------------------------
from .adjustment import energy_adjust, resolve_composition

# Configure logging
logger = logging.getLogger(__name__)


def _mean(values: Sequence[float]) -> float:
    return sum(values) / len(values)


def nutrient_totals(
    diet: AdjustedDiet,
    items: Mapping[str, FoodItem],
    compositions: Mapping[str, CompositionRecord],
) -> Dict[NutrientId, float]:
    """Daily intake per AE of every nutrient, mixed dishes and discretionary foods included."""
    totals = {nutrient: 0.0 for nutrient in NutrientId}
    for item in diet.items:
        composition = resolve_composition(item.item_id, items, compositions)
        for nutrient in NutrientId:
            totals[nutrient] += item.edible_grams * composition.nutrients[nutrient] / 100.0
    return totals


def nutrient_ratios(totals: Mapping[NutrientId, float], refs: NutrientReferenceSet) -> Dict[NutrientId, float]:
    return {nutrient: totals[nutrient] / refs[nutrient] for nutrient in NutrientId}


def score_nutrients(totals: Mapping[NutrientId, float], refs: NutrientReferenceSet) -> Tuple[Dict[NutrientId, float], float]:
    """Capped adequacy ratio per nutrient and their unweighted mean."""
    nar = {nutrient: min(1.0, ratio) for nutrient, ratio in nutrient_ratios(totals, refs).items()}
    return nar, _mean(list(nar.values()))


def food_group_ratios(diet: AdjustedDiet, guideline: GuidelineSet) -> Dict[FoodGroup, float]:
    """Consumed energy over target for the six recommended groups; a zero target counts as met."""
    ratios: Dict[FoodGroup, float] = {}
    for group in RECOMMENDED_GROUPS:
        target = guideline.target(group)
        ratios[group] = diet.group_energy.get(group, 0.0) / target if target > 0 else 1.0
    return ratios


def score_food_groups(diet: AdjustedDiet, guideline: GuidelineSet) -> Tuple[Dict[FoodGroup, float], float]:
    """Capped group adequacy and MFGA; discretionary and mixed-dish energy is never scored."""
    adequacy = {group: min(1.0, ratio) for group, ratio in food_group_ratios(diet, guideline).items()}
    return adequacy, _mean(list(adequacy.values()))


def score_diet(diet: AdjustedDiet, dataset: Dataset) -> AdequacyScores:
    totals = nutrient_totals(diet, dataset.items, dataset.compositions)
    nar, mna = score_nutrients(totals, dataset.nutrient_refs)
    adequacy, mfga = score_food_groups(diet, dataset.guideline)
    return AdequacyScores(
        household_id=diet.household_id,
        nar=nar,
        nutrient_ratios=nutrient_ratios(totals, dataset.nutrient_refs),
        mna=mna,
        group_adequacy=adequacy,
        group_ratios=food_group_ratios(diet, dataset.guideline),
        mfga=mfga,
        discretionary_kcal=diet.group_energy.get(FoodGroup.DISCRETIONARY, 0.0),
        mixed_dish_kcal=diet.group_energy.get(FoodGroup.MIXED_DISHES, 0.0),
    )


def score_household(
    household: Household,
    dataset: Dataset,
    reference_kcal: Optional[float] = None,
) -> Tuple[AdjustedDiet, AdequacyScores]:
    diet = energy_adjust(household, dataset.items, dataset.compositions, dataset.ae_table, reference_kcal)
    return diet, score_diet(diet, dataset)


def score_households(
    dataset: Dataset,
    threads: int = 1,
    reference_kcal: Optional[float] = None,
) -> Tuple[Dict[str, AdjustedDiet], Dict[str, AdequacyScores], List[Tuple[str, str]]]:
    """Adjust and score every household; zero-energy or unresolvable households become exclusions.

    Returns diets and scores keyed by household_id plus (household_id, reason) exclusions,
    all in household_id order regardless of the thread count.
    """
    households = sorted(dataset.households, key=lambda h: h.household_id)

    def _one(household: Household):
        try:
            return score_household(household, dataset, reference_kcal)
        except ZeroEnergyError:
            return "zero reported energy"
        except LookupFailure as e:
            return str(e)

    if threads > 1 and len(households) > 1:
        with ThreadPoolExecutor(max_workers=threads) as executor:
            outcomes = list(executor.map(_one, households))
    else:
        outcomes = [_one(household) for household in households]

    diets: Dict[str, AdjustedDiet] = {}
    scores: Dict[str, AdequacyScores] = {}
    exclusions: List[Tuple[str, str]] = []
    for household, outcome in zip(households, outcomes):
        if isinstance(outcome, str):
            exclusions.append((household.household_id, outcome))
            continue
        diets[household.household_id], scores[household.household_id] = outcome

    if exclusions:
        logger.info("Households excluded from adequacy", extra={"excluded": len(exclusions)})
    logger.info("Adequacy scored", extra={"households": len(scores)})
    return diets, scores, exclusions
