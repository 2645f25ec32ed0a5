# ==============================================================================
# units.py — Unit conversions shared by every phase
# ==============================================================================
# Purpose: Currency rounding, price-per-kilocalorie conversion, adult equivalents
# Sections: Imports, Currency, Price Conversion, Adult Equivalents
# ==============================================================================

# Standard Library --------------------------------------------------------------
from decimal import ROUND_HALF_EVEN, Decimal
from typing import Iterable, Union

# Core (App-wide) ---------------------------------------------------------------
from core.types.errors import LookupFailure, NonConvertibleError
from core.types.models import AeFactorTable, CompositionRecord, Member, PriceObservation

CURRENCY_QUANTUM = Decimal("0.000001")
GRAMS_PER_UNIT = {"g": Decimal(1), "kg": Decimal(1000)}


def to_decimal(value: Union[Decimal, float, int, str]) -> Decimal:
    """Exact decimal for a number; floats go through their shortest repr."""
    if isinstance(value, Decimal):
        return value
    if isinstance(value, float):
        return Decimal(repr(value))
    return Decimal(value)


def to_currency(value: Union[Decimal, float, int, str]) -> Decimal:
    """Round to six fraction digits, banker's rounding."""
    return to_decimal(value).quantize(CURRENCY_QUANTUM, rounding=ROUND_HALF_EVEN)


def format_currency(value: Decimal) -> str:
    return f"{to_currency(value):.6f}"


def price_per_gram(price: Decimal, unit: str) -> Decimal:
    """Normalize a price quoted per `unit` to currency per gram."""
    try:
        return price / GRAMS_PER_UNIT[unit]
    except KeyError:
        raise ValueError(f"unsupported unit {unit!r}; expected one of {sorted(GRAMS_PER_UNIT)}")


def price_per_kcal(obs: PriceObservation, comp: CompositionRecord) -> Decimal:
    """Cost of one edible kilocalorie, accounting for inedible waste."""
    if comp.energy_density <= 0:
        raise NonConvertibleError(f"{comp.composition_key} has zero energy density")
    if comp.edible_fraction <= 0:
        raise NonConvertibleError(f"{comp.composition_key} has zero edible fraction")
    kcal_per_gram = to_decimal(comp.edible_fraction) * to_decimal(comp.energy_density) / 100
    return obs.price / kcal_per_gram


def adult_equivalents(members: Iterable[Member], table: AeFactorTable) -> float:
    """Household size in reference-woman energy requirements."""
    total = 0.0
    count = 0
    for index, member in enumerate(members):
        factor = table.factor_for(member.age_years, member.sex)
        if factor is None:
            raise LookupFailure(index, member.age_years, member.sex.value)
        total += factor
        count += 1
    if count == 0:
        raise ValueError("members must not be empty")
    return total
