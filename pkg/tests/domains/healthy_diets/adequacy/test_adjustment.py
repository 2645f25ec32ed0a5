# ==============================================================================
# test_adjustment.py — Energy adjustment tests
# ==============================================================================
# Purpose: Test scaling of reported diets to the reference energy per adult equivalent
# Sections: Imports, Adjustment Tests, Readjustment Tests, Modeled Diet Tests
# ==============================================================================

# Standard Library --------------------------------------------------------------
import random

# Third Party -------------------------------------------------------------------
import pytest

# Core (App-wide) ---------------------------------------------------------------
from core.types.errors import UnresolvedItemError, ZeroEnergyError
from core.types.models import CONSUMED_GROUPS, FoodGroup, Member, Sex
from domains.healthy_diets.adequacy import basket_diet, energy_adjust, readjust, score_households
from domains.healthy_diets.cohd import cohd_all
from tests.factories import ae_table, composition, dataset, household, one_item_per_group, woman


def _adjust(records, **kwargs):
    items, compositions = one_item_per_group(energy=100.0)
    return energy_adjust(household("H1", records, **kwargs), items, compositions, ae_table())


class TestEnergyAdjust:
    """Test the single-factor rescaling of reported consumption."""

    def test_diet_at_reference_is_unchanged(self):
        """Test a household already at 2330 kcal per AE has factor 1."""
        # Act
        diet = _adjust([("StarchyStaples", 2000.0, "20"), ("Fruits", 330.0, "5")])

        # Assert
        assert diet.adjustment_factor == pytest.approx(1.0)
        assert diet.group_energy[FoodGroup.STARCHY_STAPLES] == pytest.approx(2000.0)
        assert diet.total_energy == pytest.approx(2330.0)

    def test_double_reference_halves_every_item(self):
        """Test 4660 kcal per AE gives factor 0.5 on energy, grams and spending."""
        # Act
        diet = _adjust([("StarchyStaples", 4000.0, "40"), ("Fruits", 660.0, "10")])

        # Assert
        assert diet.adjustment_factor == pytest.approx(0.5)
        by_id = {item.item_id: item for item in diet.items}
        assert by_id["StarchyStaples"].energy_kcal == pytest.approx(2000.0)
        assert by_id["StarchyStaples"].grams == pytest.approx(2000.0)
        assert by_id["StarchyStaples"].reported_energy_kcal == pytest.approx(4000.0)
        assert by_id["Fruits"].expenditure == pytest.approx(5.0)

    def test_per_day_and_per_adult_equivalent(self):
        """Test quantities are divided by recall days and adult equivalents before scaling."""
        # Arrange
        two_women = [woman(), Member(age_years=40, sex=Sex.FEMALE)]

        # Act
        diet = _adjust([("Vegetables", 2330.0 * 14, "140")], members=two_women, period_days=7)

        # Assert
        assert diet.adult_equivalents == 2.0
        assert diet.adjustment_factor == pytest.approx(1.0)
        assert diet.items[0].expenditure == pytest.approx(10.0)

    def test_item_ratios_preserved(self):
        """Test every item's share of total energy is unchanged by adjustment."""
        # Act
        diet = _adjust([("StarchyStaples", 900.0, "9"), ("LegumesNutsSeeds", 300.0, "3"), ("MixedDishes", 300.0, "6")])

        # Assert
        shares = {item.item_id: item.energy_kcal / diet.total_energy for item in diet.items}
        assert shares == pytest.approx({"StarchyStaples": 0.6, "LegumesNutsSeeds": 0.2, "MixedDishes": 0.2})

    def test_excluded_items_skipped(self):
        """Test condiments contribute neither energy nor spending."""
        # Act
        diet = _adjust([("Fruits", 2330.0, "10"), ("Excluded", 50.0, "99")])

        # Assert
        assert [item.item_id for item in diet.items] == ["Fruits"]
        assert diet.adjustment_factor == pytest.approx(1.0)

    def test_zero_energy_raises(self):
        """Test a diet of only excluded items cannot be adjusted."""
        # Act & Assert
        with pytest.raises(ZeroEnergyError):
            _adjust([("Excluded", 50.0, "5")])

    def test_unknown_item_raises(self):
        """Test an item missing from the item list is unresolvable."""
        # Act & Assert
        with pytest.raises(UnresolvedItemError, match="ghost"):
            _adjust([("ghost", 10.0, "1")])


class TestReadjust:
    """Test repeated adjustment."""

    def test_readjusting_is_idempotent(self):
        """Test a second adjustment leaves the diet unchanged with factor 1."""
        # Arrange
        diet = _adjust([("StarchyStaples", 1500.0, "9"), ("OilsFats", 700.0, "3")])

        # Act
        again = readjust(diet)

        # Assert
        assert again.adjustment_factor == pytest.approx(1.0)
        assert [i.energy_kcal for i in again.items] == pytest.approx([i.energy_kcal for i in diet.items])
        assert again.total_energy == pytest.approx(2330.0)

    def test_readjust_to_new_reference(self):
        """Test readjusting to half the energy halves every item."""
        # Arrange
        diet = _adjust([("StarchyStaples", 2330.0, "10")])

        # Act
        half = readjust(diet, 1165.0)

        # Assert
        assert half.adjustment_factor == pytest.approx(0.5)
        assert half.items[0].grams == pytest.approx(1165.0)

    @pytest.mark.slow
    def test_random_households_hit_reference_and_keep_shares(self):
        """Test 1,000 random households reach 2330 kcal/AE, keep item shares and are fixed points."""
        # Arrange
        rng = random.Random(2330)
        items, compositions = one_item_per_group(energy=100.0)
        compositions["OilsFats"] = composition("OilsFats", energy=880.0)
        compositions["Fruits"] = composition("Fruits", energy=60.0, edible_fraction=0.75)
        consumed = [g.value for g in CONSUMED_GROUPS] + ["Excluded"]
        ages = [4, 12, 30, 45, 70]

        for n in range(1000):
            records = [
                (item_id, round(rng.uniform(1.0, 5000.0), 1), str(rng.randint(0, 500)))
                for item_id in rng.sample(consumed, rng.randint(1, len(consumed)))
            ]
            if all(item_id == "Excluded" for item_id, _, _ in records):
                records.append(("StarchyStaples", 500.0, "5"))
            members = [Member(age_years=rng.choice(ages), sex=rng.choice(list(Sex))) for _ in range(rng.randint(1, 6))]
            h = household(f"H{n}", records, members=members, period_days=rng.choice([1, 7, 30]))

            # Act
            diet = energy_adjust(h, items, compositions, ae_table())
            again = readjust(diet)

            # Assert
            assert diet.total_energy == pytest.approx(2330.0, abs=1e-6)
            reported_total = sum(i.reported_energy_kcal for i in diet.items)
            for item in diet.items:
                assert item.energy_kcal / diet.total_energy == pytest.approx(item.reported_energy_kcal / reported_total, rel=1e-9)
            assert again.adjustment_factor == pytest.approx(1.0, rel=1e-12)
            assert [i.energy_kcal for i in again.items] == pytest.approx([i.energy_kcal for i in diet.items], rel=1e-9)


class TestScoreHouseholds:
    """Test batch adjustment with exclusions."""

    def test_zero_energy_household_excluded(self):
        """Test a household with no usable energy is excluded, not fatal."""
        # Arrange
        items, compositions = one_item_per_group()
        households = [household("H1", [("Fruits", 500.0, "5")]), household("H2", [("Excluded", 5.0, "5")])]

        # Act
        diets, scores, exclusions = score_households(dataset(items, compositions, households=households))

        # Assert
        assert sorted(diets) == ["H1"]
        assert sorted(scores) == ["H1"]
        assert exclusions == [("H2", "zero reported energy")]

    def test_thread_count_does_not_change_results(self, fixture_dataset):
        """Test parallel scoring is identical to sequential scoring."""
        # Act
        sequential = score_households(fixture_dataset, threads=1)
        parallel = score_households(fixture_dataset, threads=4)

        # Assert
        assert sequential == parallel
        assert len(sequential[1]) == 25


class TestBasketDiet:
    """Test least-cost baskets viewed as diets."""

    def test_basket_energy_matches_guideline(self, fixture_dataset):
        """Test the modeled diet carries the guideline energy unscaled."""
        # Arrange
        basket = cohd_all(fixture_dataset)["L01"]

        # Act
        diet = basket_diet(basket, fixture_dataset)

        # Assert
        assert diet.total_energy == pytest.approx(2330.0)
        assert diet.adjustment_factor == 1.0
        assert diet.group_energy[FoodGroup.VEGETABLES] == pytest.approx(97.0)
        assert sum(i.expenditure for i in diet.items) == pytest.approx(float(basket.total_cost), rel=1e-9)
