# ==============================================================================
# test_main.py — Command-line entry point tests
# ==============================================================================
# Purpose: Test subcommand dispatch, flag overrides and process exit codes
# Sections: Imports, Parser Tests, Exit Code Tests
# ==============================================================================

# Standard Library --------------------------------------------------------------
import json
from pathlib import Path

# Third Party -------------------------------------------------------------------
import pandas as pd
import pytest

# Core (App-wide) ---------------------------------------------------------------
from api.main import build_parser, main
from core.types.errors import LookupFailure


class TestParser:
    """Test argument parsing."""

    def test_subcommand_required(self):
        """Test running without a subcommand is a usage error."""
        # Act & Assert
        with pytest.raises(SystemExit) as exc_info:
            build_parser().parse_args([])
        assert exc_info.value.code == 2

    def test_flags_parsed(self):
        """Test the shared run flags."""
        # Act
        args = build_parser().parse_args([
            "cohd", "--config", "c.json", "--no-discretionary", "--fallback-region", "R1", "--threads", "3",
        ])

        # Assert
        assert args.command == "cohd"
        assert args.config == Path("c.json")
        assert args.include_discretionary is False
        assert args.fallback_region == "R1"
        assert args.threads == 3

    def test_flags_default_to_config(self):
        """Test omitted flags do not override the config."""
        # Act
        args = build_parser().parse_args(["run", "--config", "c.json"])

        # Assert
        assert args.include_discretionary is None
        assert args.quintile_rank is None


class TestExitCodes:
    """Test the process exit codes of each failure class."""

    def test_run_succeeds(self, fixture_config: Path, tmp_path: Path):
        """Test a clean dataset exits 0."""
        # Act
        code = main(["run", "--config", str(fixture_config), "--out", str(tmp_path / "out")])

        # Assert
        assert code == 0
        assert (tmp_path / "out" / "run_manifest.json").exists()

    def test_no_discretionary_flag_lowers_cost(self, fixture_config: Path, tmp_path: Path):
        """Test the flag removes the discretionary group from every basket."""
        # Act
        main(["cohd", "--config", str(fixture_config), "--out", str(tmp_path / "with")])
        main(["cohd", "--config", str(fixture_config), "--out", str(tmp_path / "without"), "--no-discretionary"])

        # Assert
        with_discretionary = pd.read_csv(tmp_path / "with" / "cohd_by_location.csv")
        without = pd.read_csv(tmp_path / "without" / "cohd_by_location.csv")
        assert (without.total_cost < with_discretionary.total_cost).all()

    def test_orphan_row_is_only_a_warning(self, fixture_config: Path, edit_fixture, tmp_path: Path):
        """Test an orphan consumption row exits 0 with exactly one warning."""
        # Arrange
        edit_fixture("consumption.csv", lambda rows: rows + ["H99,STA01,100.0,50.00"])

        # Act
        code = main(["validate", "--config", str(fixture_config), "--out", str(tmp_path / "out")])

        # Assert
        report = json.loads((tmp_path / "out" / "validation_report.json").read_text(encoding="utf-8"))
        assert code == 0
        assert len(report["issues"]) == 1
        assert report["issues"][0]["severity"] == "warning"

    def test_guideline_mismatch_exits_nonzero(self, fixture_config: Path, edit_fixture, tmp_path: Path):
        """Test a fatal validation issue exits 1."""
        # Arrange
        edit_fixture("guidelines.csv", lambda rows: ["Fruits,200,2" if r.startswith("Fruits,") else r for r in rows])

        # Act
        code = main(["run", "--config", str(fixture_config), "--out", str(tmp_path / "out")])

        # Assert
        assert code == 1
        assert not (tmp_path / "out" / "cohd_by_location.csv").exists()

    def test_missing_input_exits_two(self, fixture_config: Path, tmp_path: Path):
        """Test an absent input file exits 2."""
        # Arrange
        (fixture_config.parent / "prices.csv").unlink()

        # Act & Assert
        assert main(["validate", "--config", str(fixture_config), "--out", str(tmp_path / "out")]) == 2

    def test_bad_config_exits_three(self, tmp_path: Path):
        """Test an unreadable config exits 3."""
        # Act & Assert
        assert main(["run", "--config", str(tmp_path / "missing.json")]) == 3

    def test_invalid_option_in_config_exits_three(self, fixture_config: Path):
        """Test an unknown option value in the config file exits 3."""
        # Arrange
        raw = json.loads(fixture_config.read_text(encoding="utf-8"))
        raw["options"] = {"quintile_weight": "acres"}
        fixture_config.write_text(json.dumps(raw), encoding="utf-8")

        # Act & Assert
        assert main(["afford", "--config", str(fixture_config)]) == 3

    def test_closed_adult_equivalent_table_exits_one(self, fixture_config: Path, edit_fixture, tmp_path: Path):
        """Test an age table that stops at 64 is a fatal validation issue, not a crash."""
        # Arrange
        edit_fixture("ae_factors.csv", lambda rows: [r for r in rows if not r.startswith("female,65")])

        # Act
        code = main(["afford", "--config", str(fixture_config), "--out", str(tmp_path / "out"), "--quintile-rank", "perae"])

        # Assert
        report = json.loads((tmp_path / "out" / "validation_report.json").read_text(encoding="utf-8"))
        assert code == 1
        assert any("open-ended" in issue["message"] for issue in report["issues"])

    def test_domain_error_during_stage_exits_one(self, fixture_config: Path, tmp_path: Path, monkeypatch):
        """Test an input error raised after validation maps to exit 1."""
        # Arrange
        def unresolvable(*args, **kwargs):
            raise LookupFailure(0, 70, "female")

        monkeypatch.setattr("services.pipeline.runner.assign_quintiles", unresolvable)

        # Act
        code = main(["afford", "--config", str(fixture_config), "--out", str(tmp_path / "out")])

        # Assert
        assert code == 1
        assert not (tmp_path / "out" / "affordability_by_household.csv").exists()
