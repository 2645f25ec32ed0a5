# ==============================================================================
# conftest.py — Shared fixtures: the synthetic survey-and-prices dataset
# ==============================================================================
# Purpose: Write a deterministic, fully consistent ten-file dataset plus run config
# Sections: Imports, Fixture Constants, Dataset Writer, Pytest Fixtures
# ==============================================================================

# Standard Library --------------------------------------------------------------
import json
from pathlib import Path
from typing import Dict, List, Tuple

# Third Party -------------------------------------------------------------------
import pytest

# Core (App-wide) ---------------------------------------------------------------
from core.config.run_config import InputPaths, load_run_config
from core.types.models import Dataset, NutrientId
from domains.healthy_diets.ingest import load_dataset
from domains.healthy_diets.ingest.schemas import NUTRIENT_COLUMNS

# group, item prefix, item count, energy kcal/100g, edible fraction, price per kg, grams per AE-day
FIXTURE_GROUPS: List[Tuple[str, str, int, float, float, float, float]] = [
    ("StarchyStaples", "STA", 6, 350.0, 1.0, 12000.0, 300.0),
    ("OilsFats", "OIL", 3, 880.0, 1.0, 25000.0, 25.0),
    ("Fruits", "FRU", 5, 60.0, 0.75, 15000.0, 150.0),
    ("Vegetables", "VEG", 7, 30.0, 0.85, 10000.0, 200.0),
    ("LegumesNutsSeeds", "LEG", 4, 340.0, 1.0, 20000.0, 50.0),
    ("AnimalSourceFoods", "ASF", 6, 180.0, 0.8, 60000.0, 80.0),
    ("Discretionary", "DIS", 3, 450.0, 1.0, 30000.0, 30.0),
    ("MixedDishes", "MIX", 2, 200.0, 1.0, 35000.0, 100.0),
]
EXCLUDED_ITEMS = ["EXC01", "EXC02", "EXC03"]
LOCATIONS = [f"L0{i}" for i in range(1, 7)]
HOUSEHOLD_COUNT = 25
PERIOD_DAYS = 7
GUIDELINE_ROWS = [
    ("StarchyStaples", 1256, 2), ("OilsFats", 275, 1), ("Fruits", 138, 2), ("Vegetables", 97, 3),
    ("LegumesNutsSeeds", 265, 1), ("AnimalSourceFoods", 199, 2), ("Discretionary", 100, 1),
]
INPUT_FILES = {
    "prices": "prices.csv", "items": "items.csv", "composition": "composition.csv",
    "guidelines": "guidelines.csv", "nutrient_refs": "nutrient_refs.csv", "ae_factors": "ae_factors.csv",
    "households": "households.csv", "members": "members.csv", "consumption": "consumption.csv",
    "regions": "regions.csv",
}


def _region(location_id: str) -> str:
    return "R1" if int(location_id[1:]) <= 3 else "R2"


def _price_per_kg(base: float, item_index: int, location_index: int) -> float:
    # rotates the cheapest item from location to location
    return round(base * (1 + 0.05 * location_index) * (1 + 0.1 * ((item_index * 7 + location_index * 3) % 5)), 2)


def _write(path: Path, header: str, lines: List[str]) -> None:
    path.write_text("\n".join([header] + lines) + "\n", encoding="utf-8")


def write_fixture_dataset(directory: Path) -> Path:
    """Write the ten input files and config.json into `directory`; returns the config path."""
    directory.mkdir(parents=True, exist_ok=True)

    # 1️⃣ Items and compositions ----
    items, compositions = [], []
    for group, prefix, count, energy, edible, _, _ in FIXTURE_GROUPS:
        for j in range(1, count + 1):
            item_id = f"{prefix}0{j}"
            items.append(f"{item_id},{group} item {j},{group},c_{item_id}")
            amounts = [f"{0.5 + 0.25 * j + 0.1 * n:.2f}" for n in range(len(NutrientId))]
            compositions.append(f"c_{item_id},{energy + 5 * j:.1f},{edible},{','.join(amounts)}")
    items += [f"{item_id},condiment {item_id},Excluded," for item_id in EXCLUDED_ITEMS]
    _write(directory / "items.csv", "item_id,name,group,composition_key", items)
    _write(directory / "composition.csv", "composition_key,energy_kcal_100g,edible_fraction," + ",".join(NUTRIENT_COLUMNS.values()), compositions)

    # 2️⃣ Guidelines, references, adult equivalents, regions ----
    _write(directory / "guidelines.csv", "group,energy_kcal,item_count",
           [f"{g},{e},{k}" for g, e, k in GUIDELINE_ROWS] + ["TOTAL,2330,"])
    _write(directory / "nutrient_refs.csv", "nutrient,reference_value,unit",
           [f"{n.value},{12.0 + i},unit" for i, n in enumerate(NutrientId)])
    _write(directory / "ae_factors.csv", "sex,age_min,age_max,factor", [
        "female,0,9,0.6", "female,10,17,0.9", "female,18,64,1.0", "female,65,,0.8",
        "male,0,9,0.65", "male,10,17,0.7", "male,18,64,1.2", "male,65,,0.95",
    ])
    _write(directory / "regions.csv", "region_id,label", ["R1,Highlands", "R2,Coast"])

    # 3️⃣ Prices: every guideline item everywhere, plus an older month ----
    price_lines = []
    for l, location_id in enumerate(LOCATIONS, start=1):
        for group, prefix, count, _, _, base, _ in FIXTURE_GROUPS:
            if group == "MixedDishes":
                continue
            for j in range(1, count + 1):
                price_lines.append(f"{prefix}0{j},{location_id},2024,3,{_price_per_kg(base, j, l):.2f},kg")
                if j == 1:
                    price_lines.append(f"{prefix}0{j},{location_id},2024,2,{base * 0.5:.2f},kg")
    _write(directory / "prices.csv", "item_id,location_id,year,month,price,unit", price_lines)

    # 4️⃣ Households, members, consumption ----
    households, members, consumption = [], [], []
    roster = [("female", 30), ("male", 40), ("female", 8), ("male", 70)]
    for i in range(1, HOUSEHOLD_COUNT + 1):
        household_id = f"H{i:02d}"
        l = (i - 1) % len(LOCATIONS) + 1
        location_id = LOCATIONS[l - 1]
        size = 1 + i % 4
        for sex, age in roster[:size]:
            members.append(f"{household_id},{age},{sex}")

        food_spending = 0.0
        scale = size * PERIOD_DAYS * (0.6 + 0.05 * (i % 9))
        for g, (group, prefix, count, _, _, base, grams) in enumerate(FIXTURE_GROUPS):
            j = (i + g) % count + 1
            quantity = round(grams * scale, 1)
            spent = round(quantity / 1000 * _price_per_kg(base, j, l) * 1.1, 2)
            food_spending += spent
            consumption.append(f"{household_id},{prefix}0{j},{quantity:.1f},{spent:.2f}")
        if i % 5 == 0:
            consumption.append(f"{household_id},EXC01,10.0,500.00")

        total = round(food_spending * (2 + 0.5 * (i % 5)), 2)
        rural = "1" if i % 3 == 0 else "0"
        households.append(f"{household_id},{location_id},{_region(location_id)},{100 + 25 * (i % 4)},{PERIOD_DAYS},{total:.2f},{rural}")

    _write(directory / "households.csv", "household_id,location_id,region_id,weight,period_days,total_expenditure,rural", households)
    _write(directory / "members.csv", "household_id,age_years,sex", members)
    _write(directory / "consumption.csv", "household_id,item_id,quantity_g,expenditure", consumption)

    # 5️⃣ Run config with relative paths ----
    config_path = directory / "config.json"
    config_path.write_text(json.dumps({"inputs": INPUT_FILES, "output_dir": "out", "threads": 1}, indent=2), encoding="utf-8")
    return config_path


@pytest.fixture
def fixture_config(tmp_path: Path) -> Path:
    """Path to config.json of a freshly written fixture dataset."""
    return write_fixture_dataset(tmp_path / "data")


@pytest.fixture
def fixture_paths(fixture_config: Path) -> InputPaths:
    return load_run_config(fixture_config).inputs


@pytest.fixture
def fixture_dataset(fixture_paths: InputPaths) -> Dataset:
    dataset, report = load_dataset(fixture_paths)
    assert dataset is not None, report.fatal
    return dataset


def rewrite_rows(path: Path, transform) -> None:
    """Apply `transform` to the data lines of a fixture CSV, keeping its header."""
    header, *rows = path.read_text(encoding="utf-8").splitlines()
    path.write_text("\n".join([header] + transform(rows)) + "\n", encoding="utf-8")


@pytest.fixture
def edit_fixture(fixture_config: Path):
    """Returns a helper that rewrites one input file of the fixture by name."""
    def _edit(file_name: str, transform) -> Path:
        path = fixture_config.parent / file_name
        rewrite_rows(path, transform)
        return path
    return _edit
