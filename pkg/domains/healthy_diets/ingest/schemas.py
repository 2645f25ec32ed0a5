# ==============================================================================
# schemas.py — Input file headers
# ==============================================================================
# Purpose: Exact CSV headers of the ten input files and nutrient column names
# Sections: Imports, Nutrient Columns, File Headers
# ==============================================================================

# Standard Library --------------------------------------------------------------
from typing import Dict, Tuple

# Core (App-wide) ---------------------------------------------------------------
from core.types.models import NutrientId

NUTRIENT_COLUMNS: Dict[NutrientId, str] = {
    NutrientId.CALCIUM: "calcium_mg",
    NutrientId.IRON: "iron_mg",
    NutrientId.ZINC: "zinc_mg",
    NutrientId.THIAMIN: "thiamin_mg",
    NutrientId.RIBOFLAVIN: "riboflavin_mg",
    NutrientId.NIACIN: "niacin_mg",
    NutrientId.VITAMIN_B6: "vitb6_mg",
    NutrientId.VITAMIN_B12: "vitb12_ug",
    NutrientId.VITAMIN_C: "vitc_mg",
    NutrientId.FOLATE: "folate_ug",
    NutrientId.VITAMIN_A: "vita_ug_rae",
    NutrientId.PROTEIN: "protein_g",
    NutrientId.LIPIDS: "lipids_g",
    NutrientId.CARBOHYDRATE: "carbohydrate_g",
}

PRICES: Tuple[str, ...] = ("item_id", "location_id", "year", "month", "price", "unit")
ITEMS: Tuple[str, ...] = ("item_id", "name", "group", "composition_key")
COMPOSITION: Tuple[str, ...] = ("composition_key", "energy_kcal_100g", "edible_fraction") + tuple(NUTRIENT_COLUMNS.values())
GUIDELINES: Tuple[str, ...] = ("group", "energy_kcal", "item_count")
NUTRIENT_REFS: Tuple[str, ...] = ("nutrient", "reference_value", "unit")
AE_FACTORS: Tuple[str, ...] = ("sex", "age_min", "age_max", "factor")
HOUSEHOLDS: Tuple[str, ...] = ("household_id", "location_id", "region_id", "weight", "period_days")
HOUSEHOLDS_OPTIONAL: Tuple[str, ...] = ("total_expenditure", "rural")
MEMBERS: Tuple[str, ...] = ("household_id", "age_years", "sex")
CONSUMPTION: Tuple[str, ...] = ("household_id", "item_id", "quantity_g", "expenditure")
REGIONS: Tuple[str, ...] = ("region_id", "label")

TOTAL_ROW = "TOTAL"
