# ==============================================================================
# test_models.py — Core type models invariants
# ==============================================================================
# Purpose: Test that domain models enforce their construction-time invariants
# Sections: Imports, Group Sets, Reference Data, Households, Baskets, Records
# ==============================================================================

# Standard Library --------------------------------------------------------------
from decimal import Decimal

# Third Party -------------------------------------------------------------------
import pytest
from pydantic import ValidationError

# Core (App-wide) ---------------------------------------------------------------
from core.types.models import (
    GUIDELINE_GROUPS,
    MACRONUTRIENTS,
    MICRONUTRIENTS,
    RECOMMENDED_GROUPS,
    AeFactor,
    AeFactorTable,
    AffordabilityRecord,
    CompositionRecord,
    ConsumptionRecord,
    DietBasket,
    FoodGroup,
    GroupGuideline,
    GuidelineSet,
    NutrientReferenceSet,
    RegionCostSummary,
    SelectedItem,
    Sex,
)
from tests.factories import TABLE1_TARGETS, ae_table, guideline, nutrients


class TestGroupSets:
    """Test the fixed group and nutrient partitions."""

    def test_recommended_groups_are_the_first_six(self):
        """Test exactly the first six FoodGroup values are recommended."""
        # Act
        first_six = tuple(list(FoodGroup)[:6])

        # Assert
        assert RECOMMENDED_GROUPS == first_six
        assert FoodGroup.DISCRETIONARY in GUIDELINE_GROUPS
        assert FoodGroup.MIXED_DISHES not in GUIDELINE_GROUPS
        assert FoodGroup.EXCLUDED not in GUIDELINE_GROUPS

    def test_eleven_micronutrients_and_three_macronutrients(self):
        """Test the nutrient partition sizes."""
        # Assert
        assert len(MICRONUTRIENTS) == 11
        assert len(MACRONUTRIENTS) == 3


class TestReferenceData:
    """Test composition, reference and guideline validation."""

    def test_composition_requires_every_nutrient(self):
        """Test a record missing a nutrient is rejected."""
        # Arrange
        partial = nutrients()
        partial.pop(next(iter(partial)))

        # Act & Assert
        with pytest.raises(ValidationError):
            CompositionRecord(composition_key="x", energy_density=100, edible_fraction=1.0, nutrients=partial)

    def test_composition_rejects_zero_edible_fraction(self):
        """Test edible fraction must lie in (0, 1]."""
        # Act & Assert
        with pytest.raises(ValidationError):
            CompositionRecord(composition_key="x", energy_density=100, edible_fraction=0.0, nutrients=nutrients())

    def test_reference_set_rejects_zero(self):
        """Test every nutrient reference must be strictly positive."""
        # Arrange
        values = nutrients(10.0, iron=0.0)

        # Act & Assert
        with pytest.raises(ValidationError, match="iron"):
            NutrientReferenceSet(references=values)

    def test_table1_guideline_accepted(self):
        """Test the national guideline targets sum to 2330 kcal."""
        # Act
        guide = guideline()

        # Assert
        assert guide.total_energy == 2330.0
        assert guide.item_count(FoodGroup.VEGETABLES) == 3
        assert guide.target(FoodGroup.LEGUMES_NUTS_SEEDS) == 265.0

    def test_guideline_sum_mismatch_rejected(self):
        """Test raising fruits to 200 kcal breaks the total."""
        # Arrange
        groups = {g: GroupGuideline(energy_target=t, item_count=k) for g, (t, k) in TABLE1_TARGETS.items()}
        groups[FoodGroup.FRUITS] = GroupGuideline(energy_target=200, item_count=2)

        # Act & Assert
        with pytest.raises(ValidationError, match="2392"):
            GuidelineSet(groups=groups, total_energy=2330)

    def test_positive_target_needs_items(self):
        """Test a group with energy but no items is rejected."""
        # Act & Assert
        with pytest.raises(ValidationError):
            GroupGuideline(energy_target=100, item_count=0)


class TestAeFactorTable:
    """Test adult-equivalent table partition rules."""

    def test_lookup_open_ended_range(self):
        """Test the open-ended top range covers any older age."""
        # Arrange
        table = ae_table()

        # Act & Assert
        assert table.factor_for(30, Sex.FEMALE) == 1.0
        assert table.factor_for(101, Sex.FEMALE) == 0.8
        assert table.factor_for(12, Sex.MALE) == 0.7

    def test_gap_rejected(self):
        """Test ranges must be contiguous from zero."""
        # Arrange
        factors = [
            AeFactor(sex=Sex.FEMALE, age_min=0, age_max=17, factor=0.8),
            AeFactor(sex=Sex.FEMALE, age_min=20, age_max=None, factor=1.0),
        ]

        # Act & Assert
        with pytest.raises(ValidationError, match="gap"):
            AeFactorTable(factors=factors)

    def test_reference_cell_must_be_one(self):
        """Test the 30-year-old woman defines the unit."""
        # Arrange
        factors = [
            AeFactor(sex=Sex.FEMALE, age_min=0, age_max=None, factor=0.9),
            AeFactor(sex=Sex.MALE, age_min=0, age_max=None, factor=1.1),
        ]

        # Act & Assert
        with pytest.raises(ValidationError, match="1.0"):
            AeFactorTable(factors=factors)

    def test_missing_sex_rejected(self):
        """Test a table without any male ranges does not partition ages."""
        # Arrange
        factors = [AeFactor(sex=Sex.FEMALE, age_min=0, age_max=None, factor=1.0)]

        # Act & Assert
        with pytest.raises(ValidationError, match="no age ranges for sex male"):
            AeFactorTable(factors=factors)

    def test_closed_top_range_rejected(self):
        """Test the last range of each sex must be open-ended."""
        # Arrange
        factors = [
            AeFactor(sex=Sex.FEMALE, age_min=0, age_max=64, factor=1.0),
            AeFactor(sex=Sex.MALE, age_min=0, age_max=None, factor=1.2),
        ]

        # Act & Assert
        with pytest.raises(ValidationError, match="open-ended"):
            AeFactorTable(factors=factors)


class TestConsumptionRecord:
    """Test the consumption record invariant."""

    def test_both_zero_rejected(self):
        """Test quantity and expenditure cannot both be zero."""
        # Act & Assert
        with pytest.raises(ValidationError):
            ConsumptionRecord(item_id="a", quantity=0, expenditure=Decimal(0))

    def test_expenditure_only_accepted(self):
        """Test spending without quantity is a valid record."""
        # Act
        record = ConsumptionRecord(item_id="a", quantity=0, expenditure=Decimal("5"))

        # Assert
        assert record.expenditure == Decimal("5")


class TestDietBasket:
    """Test basket reconciliation."""

    def _item(self, share: float) -> SelectedItem:
        return SelectedItem(item_id="a", energy_kcal=Decimal("50"), energy_share=share, cost_per_kcal=Decimal("1"), cost=Decimal("50"))

    def test_total_must_equal_group_sum(self):
        """Test a total that does not reconcile is rejected."""
        # Act & Assert
        with pytest.raises(ValidationError, match="total_cost"):
            DietBasket(
                location_id="L01",
                group_costs={FoodGroup.FRUITS: Decimal("10")},
                selected={},
                total_cost=Decimal("11"),
                complete=True,
            )

    def test_shares_must_sum_to_one(self):
        """Test energy shares within a group must sum to one."""
        # Act & Assert
        with pytest.raises(ValidationError, match="shares"):
            DietBasket(
                location_id="L01",
                group_costs={FoodGroup.FRUITS: Decimal("100")},
                selected={FoodGroup.FRUITS: [self._item(0.5)]},
                total_cost=Decimal("100"),
                complete=True,
            )


class TestSummariesAndRecords:
    """Test summary ordering and affordability consistency."""

    def test_region_summary_requires_ordered_costs(self):
        """Test mean outside [min, max] is rejected."""
        # Act & Assert
        with pytest.raises(ValidationError):
            RegionCostSummary(region_id="R1", households=1, weighted_persons=1, mean_cost=5, min_cost=6, max_cost=9, group_means={})

    def test_affordability_flag_must_match_comparison(self):
        """Test can_afford must equal spending >= cost."""
        # Act & Assert
        with pytest.raises(ValidationError):
            AffordabilityRecord(
                household_id="H1",
                spending_per_ae_day=Decimal("9000"),
                local_cohd=Decimal("10503"),
                can_afford=True,
                quintile=1,
            )

    def test_boundary_record_is_affordable(self):
        """Test equality counts as affordable."""
        # Act
        record = AffordabilityRecord(
            household_id="H1",
            spending_per_ae_day=Decimal("10503"),
            local_cohd=Decimal("10503"),
            can_afford=True,
            quintile=3,
        )

        # Assert
        assert record.can_afford is True
