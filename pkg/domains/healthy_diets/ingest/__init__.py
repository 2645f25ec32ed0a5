"""Input loading, normalization and validation."""

from .issues import IssueLog
from .loaders import (
    load_ae_factors,
    load_composition,
    load_guidelines,
    load_households,
    load_items,
    load_nutrient_refs,
    load_prices,
    load_regions,
    serialize_composition,
    usable_items,
)
from .validation import load_dataset, validate

__all__ = [
    "IssueLog",
    "load_ae_factors",
    "load_composition",
    "load_dataset",
    "load_guidelines",
    "load_households",
    "load_items",
    "load_nutrient_refs",
    "load_prices",
    "load_regions",
    "serialize_composition",
    "usable_items",
    "validate",
]
