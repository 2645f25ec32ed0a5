# ==============================================================================
# groups.py — Population groups used by every per-quintile table
# ==============================================================================
# Purpose: Map households to expenditure quintiles plus the cannot-afford and all rows
# Sections: Imports, Labels, Grouping
# ==============================================================================

# Standard Library --------------------------------------------------------------
from typing import Dict, Iterable, List, Mapping

CANNOT_AFFORD = "cannot_afford"
EVERYONE = "all"


def quintile_label(quintile: int) -> str:
    return f"Q{quintile}"


def population_groups(
    quintiles: Mapping[str, int],
    unaffordable: Iterable[str] = (),
) -> Dict[str, List[str]]:
    """Household ids per row label: Q1..Q5, then cannot_afford, then all.

    The cannot_afford row overlaps the quintile rows; only ids that carry a
    quintile are placed anywhere.
    """
    groups: Dict[str, List[str]] = {quintile_label(q): [] for q in range(1, 6)}
    for household_id in sorted(quintiles):
        groups[quintile_label(quintiles[household_id])].append(household_id)
    groups[CANNOT_AFFORD] = sorted(h for h in set(unaffordable) if h in quintiles)
    groups[EVERYONE] = sorted(quintiles)
    return groups
