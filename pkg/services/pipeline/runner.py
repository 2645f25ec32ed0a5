# ==============================================================================
# runner.py — Batch pipeline stages and report emission
# ==============================================================================
# Purpose: Run validate → cohd → afford → adequacy on one config and write the report bundle
# Sections: Imports, Exit Codes, Pipeline State, Stages, Manifest
# ==============================================================================

# Standard Library --------------------------------------------------------------
import logging
from datetime import datetime, timezone
from pathlib import Path
from typing import Dict, List, Optional, Set, Tuple

# Third Party -------------------------------------------------------------------
import pandas as pd

# Core (App-wide) ---------------------------------------------------------------
from core.config.run_config import RunConfig
from core.config.settings import settings
from core.types.errors import DietBenchError, StageFailure
from core.types.models import (
    AdequacyScores,
    AdjustedDiet,
    AffordabilityRecord,
    CohdSummary,
    Dataset,
    DietBasket,
    FoodGroup,
    ValidationReport,
)
from core.utils.csv_handler import file_digest, save_csv
from core.utils.json_handler import save_json

# Internal domain modules
from domains.healthy_diets.adequacy import (
    adequacy_distributions,
    basket_diet,
    food_group_energy,
    item_shares_by_group,
    score_diet,
    score_households,
)
from domains.healthy_diets.afford import (
    affordability_by_region,
    affordability_records,
    assign_quintiles,
    descriptive_table,
    household_weights,
    spending_decomposition,
    unaffordable_ids,
)
from domains.healthy_diets.cohd import basket_item_shares, cohd_all, latest_period, summarize_costs
from domains.healthy_diets.common import population_groups
from domains.healthy_diets.ingest import load_dataset

# Internal (Current Module) -----------------------------------------------------
from .reports import (
    SORT_KEYS,
    adequacy_frame,
    affordability_frame,
    basket_adequacy_frame,
    cohd_by_location_frame,
    cohd_gaps_frame,
    cohd_summary_frame,
    exclusions_frame,
    item_shares_frame,
)

# Configure logging
logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FATAL_VALIDATION = 1
EXIT_IO = 2
EXIT_CONFIG = 3

VALIDATION_REPORT = "validation_report.json"
MANIFEST = "run_manifest.json"


class Pipeline:
    """One run over one config; each phase is computed once and reused by later stages."""

    def __init__(self, config: RunConfig):
        self.config = config
        self.output_dir = Path(config.output_dir)
        self.outputs: Dict[str, str] = {}
        self.report: Optional[ValidationReport] = None
        self._dataset: Optional[Dataset] = None
        self._baskets: Optional[Dict[str, DietBasket]] = None
        self._summary: Optional[CohdSummary] = None
        self._adequacy: Optional[Tuple[Dict[str, AdjustedDiet], Dict[str, AdequacyScores], List[Tuple[str, str]]]] = None
        self._records: Optional[List[AffordabilityRecord]] = None
        self._quintiles: Optional[Dict[str, int]] = None

    # Pipeline State ------------------------------------------------------------

    @property
    def dataset(self) -> Dataset:
        if self._dataset is None:
            raise StageFailure("validate", "dataset not loaded", EXIT_FATAL_VALIDATION)
        return self._dataset

    @property
    def weights(self) -> Dict[str, float]:
        return household_weights(self.dataset.households, self.config.options.quintile_weight)

    @property
    def excluded_items(self) -> Set[str]:
        return {i.item_id for i in self.dataset.items.values() if i.group == FoodGroup.EXCLUDED}

    def baskets(self) -> Dict[str, DietBasket]:
        if self._baskets is None:
            self._baskets = cohd_all(self.dataset, self.config.options.cohd(), threads=self.config.threads)
            self._summary = summarize_costs(self._baskets, self.dataset.households, self.dataset.region_names)
        return self._baskets

    def summary(self) -> CohdSummary:
        self.baskets()
        return self._summary

    def adequacy(self) -> Tuple[Dict[str, AdjustedDiet], Dict[str, AdequacyScores], List[Tuple[str, str]]]:
        if self._adequacy is None:
            self._adequacy = score_households(self.dataset, threads=self.config.threads)
        return self._adequacy

    def quintiles(self) -> Dict[str, int]:
        if self._quintiles is None:
            self._quintiles = assign_quintiles(
                self.dataset.households, self.dataset.ae_table, self.config.options.quintiles(), self.excluded_items,
            )
        return self._quintiles

    def records(self) -> List[AffordabilityRecord]:
        if self._records is None:
            diets, _, exclusions = self.adequacy()
            self._records = affordability_records(
                self.dataset.households, diets, self.baskets(), self.quintiles(), self.excluded_items,
                diet_exclusions=dict(exclusions),
            )
        return self._records

    async def _emit(self, name: str, frame: pd.DataFrame) -> None:
        self.outputs[name] = await save_csv(frame, self.output_dir / name, SORT_KEYS.get(name, ()))

    # Stages --------------------------------------------------------------------

    async def validate(self) -> ValidationReport:
        """Load all inputs and write validation_report.json; fatal issues abort the run."""
        # 1️⃣ Every referenced input must exist ----
        missing = self.config.inputs.missing()
        if missing:
            raise StageFailure("validate", f"input file not found: {missing[0]}", EXIT_IO)

        # 2️⃣ Load, cross-check and report ----
        self._dataset, self.report = load_dataset(self.config.inputs, period=self.config.options.period)
        await save_json(self.report.model_dump(mode="json"), self.output_dir / VALIDATION_REPORT)
        self.outputs[VALIDATION_REPORT] = file_digest(self.output_dir / VALIDATION_REPORT)

        if self.report.has_fatal:
            first = self.report.fatal[0]
            raise StageFailure("validate", f"{len(self.report.fatal)} fatal issue(s); first: {first.file}: {first.message}", EXIT_FATAL_VALIDATION)
        logger.info("Validation passed", extra={"warnings": len(self.report.warnings)})
        return self.report

    async def cohd(self) -> None:
        baskets = self.baskets()
        period = self.config.options.period or latest_period(self.dataset.prices)
        await self._emit("cohd_by_location.csv", cohd_by_location_frame(baskets, self.dataset.location_regions(), period))
        await self._emit("cohd_summary.csv", cohd_summary_frame(self.summary()))
        await self._emit("cohd_gaps.csv", cohd_gaps_frame(self.summary()))

    async def afford(self) -> None:
        diets, _, _ = self.adequacy()
        records = self.records()
        households = self.dataset.households
        weights = self.weights
        await self._emit("affordability_by_household.csv", affordability_frame(records, households))
        await self._emit("affordability_by_region.csv", affordability_by_region(records, households, weights, self.dataset.region_names))
        await self._emit("table2.csv", descriptive_table(records, households, weights))
        await self._emit("figure3.csv", spending_decomposition(records, households, diets, self.baskets(), weights))

    async def adequacy_stage(self) -> None:
        diets, scores, exclusions = self.adequacy()
        weights = self.weights
        unaffordable = unaffordable_ids(self.records())
        quintiles = self.quintiles()

        # 1️⃣ Household scores and exclusions ----
        await self._emit("adequacy_by_household.csv", adequacy_frame(diets, scores))
        await self._emit("adequacy_exclusions.csv", exclusions_frame(exclusions))

        # 2️⃣ Population distributions and group energies ----
        await self._emit("adequacy_distributions.csv", adequacy_distributions(scores, quintiles, weights, unaffordable))
        await self._emit("food_group_energy.csv", food_group_energy(diets, quintiles, weights, self.dataset.guideline, unaffordable))

        # 3️⃣ Item shares per population group, reported and least-cost ----
        reported = item_shares_by_group(diets, quintiles, weights, unaffordable)
        complete = {loc: b for loc, b in self.baskets().items() if b.complete}
        location_of = {h.household_id: h.location_id for h in self.dataset.households}
        least_cost: Dict[str, Dict[FoodGroup, Dict[str, float]]] = {}
        for label, members in population_groups(quintiles, unaffordable).items():
            location_weights: Dict[str, float] = {}
            for household_id in members:
                location_id = location_of[household_id]
                location_weights[location_id] = location_weights.get(location_id, 0.0) + weights[household_id]
            if location_weights:
                least_cost[label], _ = basket_item_shares(complete, location_weights)
        await self._emit("item_shares.csv", item_shares_frame(reported, least_cost))
        await self._emit("basket_adequacy.csv", basket_adequacy_frame({
            loc: score_diet(basket_diet(basket, self.dataset), self.dataset) for loc, basket in complete.items()
        }))

    # Manifest ------------------------------------------------------------------

    async def write_manifest(self) -> Path:
        """Input digests, options, counts and output digests; only generated_at varies between reruns."""
        inputs = self.config.inputs.model_dump()
        manifest = {
            "app": {"name": settings.app_name, "version": settings.app_version},
            "generated_at": datetime.now(timezone.utc).isoformat(),
            "inputs": {name: {"path": Path(path).name, "sha256": file_digest(path)} for name, path in sorted(inputs.items())},
            "options": self.config.options.model_dump(mode="json"),
            "threads": self.config.threads,
            "counts": {
                "households": len(self.dataset.households),
                "locations": len(self.baskets()),
                "complete_locations": sum(1 for b in self.baskets().values() if b.complete),
                "scored_households": len(self.adequacy()[1]),
                "rows": {name: c.model_dump() for name, c in self.report.counts.items()},
            },
            "issues": {"warnings": len(self.report.warnings), "fatal": len(self.report.fatal)},
            "outputs": dict(sorted(self.outputs.items())),
        }
        path = self.output_dir / MANIFEST
        await save_json(manifest, path)
        return path


async def run_stage(config: RunConfig, stage: str) -> Pipeline:
    """Run one named stage (validate, cohd, afford, adequacy or run) after validation."""
    pipeline = Pipeline(config)
    logger.info("Stage started", extra={"stage": stage, "output_dir": str(pipeline.output_dir)})

    try:
        await pipeline.validate()
        if stage in ("cohd", "run"):
            await pipeline.cohd()
        if stage in ("afford", "run"):
            await pipeline.afford()
        if stage in ("adequacy", "run"):
            await pipeline.adequacy_stage()
        if stage == "run":
            await pipeline.write_manifest()
    except StageFailure:
        raise
    except OSError as e:
        raise StageFailure(stage, str(e), EXIT_IO)
    except DietBenchError as e:
        logger.error("Stage hit unusable input", extra={"stage": stage, "error_type": type(e).__name__, "error": str(e)})
        raise StageFailure(stage, str(e), EXIT_FATAL_VALIDATION) from e

    logger.info("Stage completed", extra={"stage": stage, "outputs": len(pipeline.outputs)})
    return pipeline
