# ==============================================================================
# models.py — Core data models and type definitions
# ==============================================================================
# Purpose: Centralized Pydantic models for every dataset, intermediate and result
# Sections: Imports, Enumerations, Reference Data, Prices, Households, Baskets,
#           Adequacy, Affordability, Validation, Dataset, Options
# ==============================================================================

# Standard Library --------------------------------------------------------------
from decimal import Decimal
from enum import Enum
from typing import Dict, List, Literal, Optional, Tuple

# Third Party -------------------------------------------------------------------
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


class FrozenModel(BaseModel):
    """Immutable base for all domain types."""

    model_config = ConfigDict(frozen=True)


# Enumerations ------------------------------------------------------------------

class FoodGroup(str, Enum):
    """Food groups of the dietary guidelines plus the two non-guideline categories."""

    STARCHY_STAPLES = "StarchyStaples"
    OILS_FATS = "OilsFats"
    FRUITS = "Fruits"
    VEGETABLES = "Vegetables"
    LEGUMES_NUTS_SEEDS = "LegumesNutsSeeds"
    ANIMAL_SOURCE_FOODS = "AnimalSourceFoods"
    DISCRETIONARY = "Discretionary"
    MIXED_DISHES = "MixedDishes"
    EXCLUDED = "Excluded"


# Groups required in a healthy diet and scored by MFGA
RECOMMENDED_GROUPS: Tuple[FoodGroup, ...] = (
    FoodGroup.STARCHY_STAPLES,
    FoodGroup.OILS_FATS,
    FoodGroup.FRUITS,
    FoodGroup.VEGETABLES,
    FoodGroup.LEGUMES_NUTS_SEEDS,
    FoodGroup.ANIMAL_SOURCE_FOODS,
)

# Groups carrying an energy target in the guidelines
GUIDELINE_GROUPS: Tuple[FoodGroup, ...] = RECOMMENDED_GROUPS + (FoodGroup.DISCRETIONARY,)

# Groups whose items carry composition and count toward reported energy
CONSUMED_GROUPS: Tuple[FoodGroup, ...] = GUIDELINE_GROUPS + (FoodGroup.MIXED_DISHES,)


class NutrientId(str, Enum):
    """The 11 micronutrients and 3 macronutrients scored for adequacy."""

    CALCIUM = "calcium"
    IRON = "iron"
    ZINC = "zinc"
    THIAMIN = "thiamin"
    RIBOFLAVIN = "riboflavin"
    NIACIN = "niacin"
    VITAMIN_B6 = "vitaminB6"
    VITAMIN_B12 = "vitaminB12"
    VITAMIN_C = "vitaminC"
    FOLATE = "folate"
    VITAMIN_A = "vitaminA"
    PROTEIN = "protein"
    LIPIDS = "lipids"
    CARBOHYDRATE = "carbohydrate"


MACRONUTRIENTS: Tuple[NutrientId, ...] = (NutrientId.PROTEIN, NutrientId.LIPIDS, NutrientId.CARBOHYDRATE)
MICRONUTRIENTS: Tuple[NutrientId, ...] = tuple(n for n in NutrientId if n not in MACRONUTRIENTS)


class Sex(str, Enum):
    FEMALE = "female"
    MALE = "male"


class Severity(str, Enum):
    FATAL = "fatal"
    WARNING = "warning"


# Reference Data ----------------------------------------------------------------

class FoodItem(FrozenModel):
    """One item of the price list or consumption module."""

    item_id: str = Field(..., min_length=1)
    name: str = ""
    group: FoodGroup
    composition_key: Optional[str] = Field(None, description="Key into the composition table; blank for Excluded items")


class CompositionRecord(FrozenModel):
    """Energy, edible fraction and nutrient densities per 100 g edible portion."""

    composition_key: str = Field(..., min_length=1)
    energy_density: float = Field(..., ge=0, description="kcal per 100 g edible portion")
    edible_fraction: float = Field(1.0, gt=0, le=1)
    nutrients: Dict[NutrientId, float]

    @field_validator("nutrients")
    @classmethod
    def _all_nutrients_present(cls, value: Dict[NutrientId, float]) -> Dict[NutrientId, float]:
        missing = [n.value for n in NutrientId if n not in value]
        if missing:
            raise ValueError(f"missing nutrients: {', '.join(missing)}")
        if any(amount < 0 for amount in value.values()):
            raise ValueError("nutrient amounts must be non-negative")
        return value


class NutrientReferenceSet(FrozenModel):
    """Daily reference intake per nutrient for the reference adult woman."""

    references: Dict[NutrientId, float]

    @field_validator("references")
    @classmethod
    def _complete_and_positive(cls, value: Dict[NutrientId, float]) -> Dict[NutrientId, float]:
        missing = [n.value for n in NutrientId if n not in value]
        if missing:
            raise ValueError(f"missing nutrient references: {', '.join(missing)}")
        non_positive = [n.value for n, ref in value.items() if ref <= 0]
        if non_positive:
            raise ValueError(f"non-positive nutrient references: {', '.join(non_positive)}")
        return value

    def __getitem__(self, nutrient: NutrientId) -> float:
        return self.references[nutrient]


class GroupGuideline(FrozenModel):
    energy_target: float = Field(..., ge=0, description="kcal/day")
    item_count: int = Field(..., ge=0)

    @model_validator(mode="after")
    def _items_for_positive_target(self) -> "GroupGuideline":
        if self.energy_target > 0 and self.item_count < 1:
            raise ValueError("item_count must be at least 1 when energy_target is positive")
        return self


class GuidelineSet(FrozenModel):
    """Per-group energy targets and item counts of the dietary guidelines."""

    groups: Dict[FoodGroup, GroupGuideline]
    total_energy: float = Field(2330.0, gt=0)

    @model_validator(mode="after")
    def _groups_sum_to_total(self) -> "GuidelineSet":
        missing = [g.value for g in GUIDELINE_GROUPS if g not in self.groups]
        if missing:
            raise ValueError(f"missing guideline groups: {', '.join(missing)}")
        extra = [g.value for g in self.groups if g not in GUIDELINE_GROUPS]
        if extra:
            raise ValueError(f"groups without guideline targets: {', '.join(extra)}")
        target_sum = sum(g.energy_target for g in self.groups.values())
        if abs(target_sum - self.total_energy) > 0.5:
            raise ValueError(
                f"group targets sum to {target_sum:g} kcal but total_energy is {self.total_energy:g} kcal"
            )
        return self

    def target(self, group: FoodGroup) -> float:
        return self.groups[group].energy_target

    def item_count(self, group: FoodGroup) -> int:
        return self.groups[group].item_count


class AeFactor(FrozenModel):
    """Energy requirement of one (age range, sex) cell relative to the reference woman."""

    sex: Sex
    age_min: int = Field(..., ge=0)
    age_max: Optional[int] = Field(None, description="Inclusive upper bound; None means open-ended")
    factor: float = Field(..., gt=0)

    def covers(self, age_years: int) -> bool:
        return self.age_min <= age_years and (self.age_max is None or age_years <= self.age_max)


class AeFactorTable(FrozenModel):
    """Adult-equivalent factors per (age range, sex)."""

    factors: List[AeFactor] = Field(..., min_length=1)

    @model_validator(mode="after")
    def _ranges_partition_ages(self) -> "AeFactorTable":
        for sex in Sex:
            cells = sorted((f for f in self.factors if f.sex == sex), key=lambda f: f.age_min)
            if not cells:
                raise ValueError(f"no age ranges for sex {sex.value}")
            if cells[0].age_min != 0:
                raise ValueError(f"{sex.value} age ranges must start at 0")
            for previous, current in zip(cells, cells[1:]):
                if previous.age_max is None or current.age_min != previous.age_max + 1:
                    raise ValueError(
                        f"{sex.value} age ranges overlap or leave a gap at {previous.age_min}-{previous.age_max}"
                    )
            if cells[-1].age_max is not None:
                raise ValueError(f"{sex.value} age ranges must end open-ended, last ends at {cells[-1].age_max}")
        reference = self.factor_for(30, Sex.FEMALE)
        if reference is None or abs(reference - 1.0) > 1e-12:
            raise ValueError("the (30-year-old, female) cell must equal 1.0")
        return self

    def factor_for(self, age_years: int, sex: Sex) -> Optional[float]:
        for cell in self.factors:
            if cell.sex == sex and cell.covers(age_years):
                return cell.factor
        return None


# Prices ------------------------------------------------------------------------

class PriceObservation(FrozenModel):
    """One item's retail price at one location in one month, per gram as purchased."""

    item_id: str
    location_id: str
    period: str = Field(..., pattern=r"^\d{4}-\d{2}$", description="YYYY-MM")
    price: Decimal = Field(..., gt=0, description="currency per gram as purchased")
    quantity_unit: Literal["g"] = "g"


class PricedItem(FrozenModel):
    item_id: str
    cost_per_kcal: Decimal


class LocationPriceTable(FrozenModel):
    """Items per group at one location, cheapest first, ties by item_id."""

    location_id: str
    groups: Dict[FoodGroup, List[PricedItem]]

    @field_validator("groups")
    @classmethod
    def _sorted(cls, value: Dict[FoodGroup, List[PricedItem]]) -> Dict[FoodGroup, List[PricedItem]]:
        return {
            group: sorted(items, key=lambda p: (p.cost_per_kcal, p.item_id))
            for group, items in value.items()
        }

    def items_for(self, group: FoodGroup) -> List[PricedItem]:
        return self.groups.get(group, [])


# Households --------------------------------------------------------------------

class Member(FrozenModel):
    age_years: int = Field(..., ge=0)
    sex: Sex


class ConsumptionRecord(FrozenModel):
    """Quantity (grams as purchased) and spending for one item over the recall period."""

    item_id: str
    quantity: float = Field(..., ge=0)
    expenditure: Decimal = Field(..., ge=0)

    @model_validator(mode="after")
    def _not_empty(self) -> "ConsumptionRecord":
        if self.quantity == 0 and self.expenditure == 0:
            raise ValueError("quantity and expenditure cannot both be zero")
        return self


class Household(FrozenModel):
    household_id: str
    location_id: str
    region_id: str
    sampling_weight: float = Field(..., gt=0)
    members: List[Member] = Field(..., min_length=1)
    records: List[ConsumptionRecord] = Field(default_factory=list)
    period_days: int = Field(..., gt=0)
    total_expenditure: Optional[Decimal] = Field(None, ge=0, description="All-goods spending over the recall period")
    rural: Optional[bool] = None

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def person_weight(self) -> float:
        return self.sampling_weight * len(self.members)


# Baskets -----------------------------------------------------------------------

class SelectedItem(FrozenModel):
    item_id: str
    energy_kcal: Decimal
    energy_share: float = Field(..., gt=0, le=1)
    cost_per_kcal: Decimal
    cost: Decimal


class DietBasket(FrozenModel):
    """Least-cost healthy diet at one location."""

    location_id: str
    group_costs: Dict[FoodGroup, Decimal]
    selected: Dict[FoodGroup, List[SelectedItem]]
    total_cost: Decimal
    complete: bool
    missing_groups: List[FoodGroup] = Field(default_factory=list)
    borrowed_groups: List[FoodGroup] = Field(default_factory=list)

    @model_validator(mode="after")
    def _costs_reconcile(self) -> "DietBasket":
        if abs(sum(self.group_costs.values(), Decimal(0)) - self.total_cost) > Decimal("1e-9"):
            raise ValueError("total_cost must equal the sum of group_costs")
        for group, items in self.selected.items():
            if items and abs(sum(i.energy_share for i in items) - 1.0) > 1e-9:
                raise ValueError(f"energy shares of {group.value} do not sum to 1")
        return self


class CoverageGap(FrozenModel):
    household_id: str
    location_id: str
    reason: str


class RegionCostSummary(FrozenModel):
    region_id: str
    label: str = ""
    households: int
    weighted_persons: float
    mean_cost: float
    min_cost: float
    max_cost: float
    group_means: Dict[FoodGroup, float]

    @model_validator(mode="after")
    def _ordered(self) -> "RegionCostSummary":
        tolerance = 1e-9 * max(1.0, abs(self.max_cost))
        if not (self.min_cost - tolerance <= self.mean_cost <= self.max_cost + tolerance):
            raise ValueError("expected min_cost <= mean_cost <= max_cost")
        return self


class CohdSummary(FrozenModel):
    regions: List[RegionCostSummary]
    national: Optional[RegionCostSummary] = None
    gaps: List[CoverageGap] = Field(default_factory=list)


# Adequacy ----------------------------------------------------------------------

class AdjustedItem(FrozenModel):
    """One consumed item per adult equivalent per day, after energy adjustment."""

    item_id: str
    group: FoodGroup
    reported_energy_kcal: float = Field(..., ge=0, description="Before adjustment")
    energy_kcal: float = Field(..., ge=0)
    grams: float = Field(..., ge=0, description="As purchased")
    edible_grams: float = Field(..., ge=0)
    expenditure: float = Field(0.0, ge=0)


class AdjustedDiet(FrozenModel):
    household_id: str
    adult_equivalents: float = Field(..., gt=0)
    items: List[AdjustedItem]
    group_energy: Dict[FoodGroup, float]
    total_energy: float
    adjustment_factor: float = Field(..., gt=0)

    def group_items(self, group: FoodGroup) -> List[AdjustedItem]:
        return [item for item in self.items if item.group == group]


class AdequacyScores(FrozenModel):
    household_id: str
    nar: Dict[NutrientId, float]
    nutrient_ratios: Dict[NutrientId, float] = Field(default_factory=dict, description="Uncapped")
    mna: float = Field(..., ge=0, le=1)
    group_adequacy: Dict[FoodGroup, float]
    group_ratios: Dict[FoodGroup, float] = Field(default_factory=dict, description="Uncapped")
    mfga: float = Field(..., ge=0, le=1)
    discretionary_kcal: float = 0.0
    mixed_dish_kcal: float = 0.0

    @model_validator(mode="after")
    def _bounded(self) -> "AdequacyScores":
        for value in list(self.nar.values()) + list(self.group_adequacy.values()):
            if not 0.0 <= value <= 1.0:
                raise ValueError("adequacy ratios must lie in [0, 1]")
        return self


# Affordability -----------------------------------------------------------------

class AffordabilityRecord(FrozenModel):
    household_id: str
    spending_per_ae_day: Decimal
    local_cohd: Optional[Decimal] = None
    can_afford: Optional[bool] = Field(None, description="None when excluded")
    quintile: int = Field(..., ge=1, le=5)
    food_share: Optional[float] = None
    zero_spending: bool = False
    excluded_reason: Optional[str] = None

    @model_validator(mode="after")
    def _classification_consistent(self) -> "AffordabilityRecord":
        if self.can_afford is not None and self.local_cohd is not None:
            if self.can_afford != (self.spending_per_ae_day >= self.local_cohd):
                raise ValueError("can_afford must equal spending_per_ae_day >= local_cohd")
        return self


# Validation --------------------------------------------------------------------

class ValidationIssue(FrozenModel):
    severity: Severity
    file: str
    row: Optional[int] = None
    message: str


class InputCounts(FrozenModel):
    rows_read: int = 0
    rows_rejected: int = 0


class ValidationReport(FrozenModel):
    counts: Dict[str, InputCounts] = Field(default_factory=dict)
    issues: List[ValidationIssue] = Field(default_factory=list)
    unmatched_items: List[str] = Field(default_factory=list)
    unsatisfiable: Dict[str, List[FoodGroup]] = Field(default_factory=dict, description="location_id -> groups")

    @property
    def fatal(self) -> List[ValidationIssue]:
        return [i for i in self.issues if i.severity == Severity.FATAL]

    @property
    def warnings(self) -> List[ValidationIssue]:
        return [i for i in self.issues if i.severity == Severity.WARNING]

    @property
    def has_fatal(self) -> bool:
        return bool(self.fatal)


# Dataset -----------------------------------------------------------------------

class Dataset(FrozenModel):
    """Matched, analysis-ready inputs."""

    items: Dict[str, FoodItem]
    compositions: Dict[str, CompositionRecord]
    guideline: GuidelineSet
    nutrient_refs: NutrientReferenceSet
    ae_table: AeFactorTable
    prices: List[PriceObservation]
    households: List[Household]
    region_names: Dict[str, str] = Field(default_factory=dict)

    @model_validator(mode="after")
    def _items_resolve(self) -> "Dataset":
        unknown = sorted(
            {p.item_id for p in self.prices if p.item_id not in self.items}
            | {r.item_id for h in self.households for r in h.records if r.item_id not in self.items}
        )
        if unknown:
            raise ValueError(f"unknown item ids: {', '.join(unknown)}")
        return self

    def composition_of(self, item_id: str) -> Optional[CompositionRecord]:
        item = self.items[item_id]
        if item.composition_key is None:
            return None
        return self.compositions.get(item.composition_key)

    def location_ids(self) -> List[str]:
        return sorted({p.location_id for p in self.prices})

    def location_regions(self) -> Dict[str, str]:
        """Location to region mapping as reported by the household roster."""
        mapping: Dict[str, str] = {}
        for household in sorted(self.households, key=lambda h: h.household_id):
            mapping.setdefault(household.location_id, household.region_id)
        return mapping


# Options -----------------------------------------------------------------------

class CohdOptions(FrozenModel):
    include_discretionary: bool = True
    fallback_parent_region: Optional[str] = None
    period: Optional[str] = Field(None, pattern=r"^\d{4}-\d{2}$")


class QuintileOptions(FrozenModel):
    rank_by: Literal["percapita", "perae"] = "percapita"
    weight_by: Literal["persons", "households"] = "persons"
