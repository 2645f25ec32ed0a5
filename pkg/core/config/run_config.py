# ==============================================================================
# run_config.py — Batch run configuration file
# ==============================================================================
# Purpose: Parse the committed JSON run config and apply command-line overrides
# Sections: Imports, Config Models, Loading, Overrides
# ==============================================================================

# Standard Library --------------------------------------------------------------
import json
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional

# Third Party -------------------------------------------------------------------
from pydantic import BaseModel, ConfigDict, Field, ValidationError

# Core (App-wide) ---------------------------------------------------------------
from core.config.settings import settings
from core.types.errors import ConfigError
from core.types.models import CohdOptions, QuintileOptions


class InputPaths(BaseModel):
    """The ten input files of a dataset."""

    model_config = ConfigDict(extra="forbid")

    prices: Path
    items: Path
    composition: Path
    guidelines: Path
    nutrient_refs: Path
    ae_factors: Path
    households: Path
    members: Path
    consumption: Path
    regions: Path

    def resolved(self, base: Path) -> "InputPaths":
        return InputPaths(**{
            name: (path if path.is_absolute() else base / path)
            for name, path in self.model_dump().items()
        })

    def missing(self) -> List[Path]:
        return [path for path in self.model_dump().values() if not Path(path).is_file()]


class RunOptions(BaseModel):
    model_config = ConfigDict(extra="forbid")

    include_discretionary: bool = True
    fallback_parent_region: Optional[str] = None
    period: Optional[str] = Field(None, pattern=r"^\d{4}-\d{2}$")
    quintile_rank: Literal["percapita", "perae"] = "percapita"
    quintile_weight: Literal["persons", "households"] = "persons"

    def cohd(self) -> CohdOptions:
        return CohdOptions(
            include_discretionary=self.include_discretionary,
            fallback_parent_region=self.fallback_parent_region,
            period=self.period,
        )

    def quintiles(self) -> QuintileOptions:
        return QuintileOptions(rank_by=self.quintile_rank, weight_by=self.quintile_weight)


class RunConfig(BaseModel):
    """Reproducible run definition; the pipeline has no randomness."""

    model_config = ConfigDict(extra="forbid")

    inputs: InputPaths
    options: RunOptions = Field(default_factory=RunOptions)
    output_dir: Path = Field(default_factory=lambda: Path(settings.output_dir))
    threads: int = Field(default_factory=lambda: settings.threads, ge=1)


def load_run_config(path: Path, overrides: Optional[Dict[str, Any]] = None) -> RunConfig:
    """Read the config file, resolve relative paths against it and apply flag overrides."""
    # 1️⃣ Parse JSON ----
    try:
        raw = json.loads(Path(path).read_text(encoding="utf-8"))
    except FileNotFoundError:
        raise ConfigError(f"Config file not found: {path}")
    except (OSError, json.JSONDecodeError) as e:
        raise ConfigError(f"Cannot parse config file {path}: {str(e)}")
    if not isinstance(raw, dict):
        raise ConfigError(f"Config file {path} must contain a JSON object")

    # 2️⃣ Apply overrides; flags win ----
    overrides = overrides or {}
    options = dict(raw.get("options") or {})
    for key in ("include_discretionary", "fallback_parent_region", "period", "quintile_rank", "quintile_weight"):
        if overrides.get(key) is not None:
            options[key] = overrides[key]
    raw["options"] = options
    for key in ("output_dir", "threads"):
        if overrides.get(key) is not None:
            raw[key] = overrides[key]

    # 3️⃣ Validate and resolve paths ----
    try:
        config = RunConfig(**raw)
    except ValidationError as e:
        raise ConfigError(f"Invalid config file {path}: {str(e)}")

    base = Path(path).resolve().parent
    output_dir = config.output_dir if config.output_dir.is_absolute() else base / config.output_dir
    if "output_dir" in overrides and overrides["output_dir"] is not None:
        output_dir = Path(overrides["output_dir"])
    return config.model_copy(update={"inputs": config.inputs.resolved(base), "output_dir": output_dir})
