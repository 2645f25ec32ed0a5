# ==============================================================================
# aggregation.py — Population summaries of adjusted diets and scores
# ==============================================================================
# Purpose: Weighted item shares, score distributions and group energies per population group
# Sections: Imports, Item Shares, Score Distributions, Food-Group Energy
# ==============================================================================

# Standard Library --------------------------------------------------------------
import logging
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

# Third Party -------------------------------------------------------------------
import pandas as pd

# Core (App-wide) ---------------------------------------------------------------
from core.types.models import (
    CONSUMED_GROUPS,
    MICRONUTRIENTS,
    RECOMMENDED_GROUPS,
    AdequacyScores,
    AdjustedDiet,
    FoodGroup,
    GuidelineSet,
    NutrientId,
)
from core.utils.weighted_stats import weighted_mean, weighted_quantile

# Internal domain modules
from domains.healthy_diets.common import population_groups, weighted_item_shares

# Configure logging
logger = logging.getLogger(__name__)

DISTRIBUTION_COLUMNS = [
    "population_group", "indicator", "kind", "households", "weighted_count",
    "median", "q1", "q3", "mean", "capped_median", "capped_mean",
]


def item_energy_shares(
    diets: Sequence[AdjustedDiet],
    weights: Mapping[str, float],
) -> Tuple[Dict[FoodGroup, Dict[str, float]], List[FoodGroup]]:
    """Weighted mean share of each item in its group's energy; returns (shares, omitted groups)."""
    if not diets:
        raise ValueError("item shares need at least one diet")
    entries = []
    for diet in sorted(diets, key=lambda d: d.household_id):
        energy: Dict[FoodGroup, Dict[str, float]] = {}
        for item in diet.items:
            energy.setdefault(item.group, {})
            energy[item.group][item.item_id] = energy[item.group].get(item.item_id, 0.0) + item.energy_kcal
        entries.append((weights[diet.household_id], energy))
    return weighted_item_shares(entries)


def item_shares_by_group(
    diets: Mapping[str, AdjustedDiet],
    quintiles: Mapping[str, int],
    weights: Mapping[str, float],
    unaffordable: Iterable[str] = (),
) -> Dict[str, Dict[FoodGroup, Dict[str, float]]]:
    """Reported item shares per population group; groups without diets are left out."""
    covered = {h: q for h, q in quintiles.items() if h in diets}
    shares: Dict[str, Dict[FoodGroup, Dict[str, float]]] = {}
    for label, members in population_groups(covered, unaffordable).items():
        if not members:
            continue
        shares[label], _ = item_energy_shares([diets[h] for h in members], weights)
    return shares


def _indicators(scores: AdequacyScores) -> Iterable[Tuple[str, str, float, float]]:
    """(indicator, kind, uncapped, capped) for every reported indicator."""
    for nutrient in NutrientId:
        kind = "micronutrient" if nutrient in MICRONUTRIENTS else "macronutrient"
        yield nutrient.value, kind, scores.nutrient_ratios.get(nutrient, scores.nar[nutrient]), scores.nar[nutrient]
    for group in RECOMMENDED_GROUPS:
        yield group.value, "food_group", scores.group_ratios.get(group, scores.group_adequacy[group]), scores.group_adequacy[group]
    yield "MNA", "summary", scores.mna, scores.mna
    yield "MFGA", "summary", scores.mfga, scores.mfga


def adequacy_distributions(
    scores: Mapping[str, AdequacyScores],
    quintiles: Mapping[str, int],
    weights: Mapping[str, float],
    unaffordable: Iterable[str] = (),
) -> pd.DataFrame:
    """Weighted median, quartiles and mean of uncapped ratios per population group and indicator.

    Capped median and mean sit beside them. Empty groups are left out and
    named in ``frame.attrs["notes"]``.
    """
    scored = {h: q for h, q in quintiles.items() if h in scores}
    rows: List[dict] = []
    notes: List[str] = []

    for label, members in population_groups(scored, unaffordable).items():
        if not members:
            notes.append(f"{label}: no scored households")
            continue
        member_weights = [weights[h] for h in members]
        per_indicator: Dict[Tuple[str, str], Tuple[List[float], List[float]]] = {}
        for household_id in members:
            for indicator, kind, uncapped, capped in _indicators(scores[household_id]):
                raw, cap = per_indicator.setdefault((indicator, kind), ([], []))
                raw.append(uncapped)
                cap.append(capped)

        for (indicator, kind), (raw, cap) in per_indicator.items():
            rows.append({
                "population_group": label,
                "indicator": indicator,
                "kind": kind,
                "households": len(members),
                "weighted_count": sum(member_weights),
                "median": weighted_quantile(raw, member_weights, 0.5),
                "q1": weighted_quantile(raw, member_weights, 0.25),
                "q3": weighted_quantile(raw, member_weights, 0.75),
                "mean": weighted_mean(raw, member_weights),
                "capped_median": weighted_quantile(cap, member_weights, 0.5),
                "capped_mean": weighted_mean(cap, member_weights),
            })

    for note in notes:
        logger.info("Population group omitted from distributions", extra={"note": note})
    frame = pd.DataFrame(rows, columns=DISTRIBUTION_COLUMNS)
    frame.attrs["notes"] = notes
    return frame


def food_group_energy(
    diets: Mapping[str, AdjustedDiet],
    quintiles: Mapping[str, int],
    weights: Mapping[str, float],
    guideline: GuidelineSet,
    unaffordable: Iterable[str] = (),
) -> pd.DataFrame:
    """Weighted mean energy per AE by food group against the guideline reference."""
    covered = {h: q for h, q in quintiles.items() if h in diets}
    rows: List[dict] = []

    for label, members in population_groups(covered, unaffordable).items():
        if not members:
            continue
        member_weights = [weights[h] for h in members]
        means = {
            group: weighted_mean([diets[h].group_energy.get(group, 0.0) for h in members], member_weights)
            for group in CONSUMED_GROUPS
        }
        consumed = sum(means.values())
        for group in CONSUMED_GROUPS:
            rows.append({
                "population_group": label,
                "food_group": group.value,
                "households": len(members),
                "mean_kcal": means[group],
                "reference_kcal": guideline.target(group) if group in guideline.groups else float("nan"),
                "energy_share": means[group] / consumed if consumed > 0 else 0.0,
            })

    return pd.DataFrame(
        rows,
        columns=["population_group", "food_group", "households", "mean_kcal", "reference_kcal", "energy_share"],
    )
