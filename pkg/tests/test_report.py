"""Tests for report models and rendering."""

import json

import pytest
from pydantic import ValidationError
from rich.console import Console

from helixlab.numerics.comparison import Comparison
from helixlab.report.models import ANCHORS, CheckRecord, Report, ReportSummary, RunConfig, TGrid
from helixlab.report.render import render_table


def make_record(name: str = "check", passed: bool = True, **overrides) -> CheckRecord:
    values = {
        "suite": "sol",
        "name": name,
        "anchor": "sol-ricci",
        "lhs": 1.0,
        "rhs": 1.0,
        "residual": 0.0,
        "tol": 1e-8,
        "passed": passed,
    }
    values.update(overrides)
    return CheckRecord(**values)


def make_report(records: list[CheckRecord], wall_time: float = 1.25) -> Report:
    failed = sum(1 for r in records if not r.passed)
    return Report(
        version="1",
        command="sol",
        config=RunConfig(command="sol"),
        records=records,
        summary=ReportSummary(total=len(records), failed=failed, suites={"sol": failed == 0}),
        passed=failed == 0,
        wall_time=wall_time,
    )


class TestCheckRecord:
    """Test CheckRecord validation and serialization."""

    def test_unknown_anchor(self):
        """Test that anchors outside the closed set are refused."""
        with pytest.raises(ValidationError, match="unknown anchor"):
            make_record(anchor="made-up")

    def test_every_anchor_is_accepted(self):
        """Test each member of the anchor set."""
        for anchor in ANCHORS:
            assert make_record(anchor=anchor).anchor == anchor

    def test_pass_alias(self):
        """Test that the record can be built and dumped with the 'pass' key."""
        record = CheckRecord.model_validate(
            {"suite": "sol", "name": "x", "anchor": "sol-ricci", "lhs": None, "rhs": None,
             "residual": None, "tol": 1e-6, "pass": False}
        )
        assert record.passed is False
        dumped = record.model_dump(by_alias=True)
        assert dumped["pass"] is False
        assert "passed" not in dumped

    def test_anchor_alias(self):
        """Test that the anchor is read and written under 'paper_anchor'."""
        record = CheckRecord.model_validate(
            {"suite": "sol", "name": "x", "paper_anchor": "sol-ricci", "lhs": 1.0, "rhs": 1.0,
             "residual": 0.0, "tol": 1e-6, "pass": True}
        )
        assert record.anchor == "sol-ricci"
        assert record.model_dump(by_alias=True)["paper_anchor"] == "sol-ricci"

    def test_from_comparison(self):
        """Test conversion of a comparison with a relative tolerance."""
        comparison = Comparison.scalar("ricci", "sol-ricci", 100.0, 100.00005, note="z=0")
        record = CheckRecord.from_comparison("sol", comparison, 1e-6, relative=True)
        assert record.passed
        assert record.residual == pytest.approx(5e-5)
        assert record.detail == "z=0"
        assert not CheckRecord.from_comparison("sol", comparison, 1e-6).passed


class TestTGrid:
    """Test the offset grid option."""

    def test_parse(self):
        """Test a valid grid."""
        grid = TGrid.parse("-0.5:0.5:5")
        assert grid.values() == pytest.approx([-0.5, -0.25, 0.0, 0.25, 0.5])

    @pytest.mark.parametrize("text", ["0:1", "a:b:5", "0:1:4", "0:1:2:3"])
    def test_invalid(self, text):
        """Test malformed grids and grids with fewer than five values."""
        with pytest.raises(ValueError):
            TGrid.parse(text)


class TestRunConfig:
    """Test run configuration validation."""

    def test_defaults(self):
        """Test default values."""
        config = RunConfig(command="analyze")
        assert config.samples == 100
        assert config.tol == 1e-6
        assert config.max_k == 6
        assert config.error_handling == "lenient"
        assert config.tolerances.seed == 0

    def test_zero_direction(self):
        """Test that d = 0 is refused."""
        with pytest.raises(ValidationError, match="nonzero"):
            RunConfig(command="analyze", direction=[0.0, 0.0, 0.0])

    def test_chart_and_spec_are_exclusive(self, tmp_path):
        """Test that only one chart source may be given."""
        with pytest.raises(ValidationError, match="not both"):
            RunConfig(command="analyze", chart="cone", spec=tmp_path / "surface.json")

    @pytest.mark.parametrize("max_k", [0, 13])
    def test_max_k_range(self, max_k):
        """Test the dimension cap of the trace identity run."""
        with pytest.raises(ValidationError):
            RunConfig(command="lemma-la", max_k=max_k)

    def test_extra_fields_forbidden(self):
        """Test that unknown options are refused."""
        with pytest.raises(ValidationError):
            RunConfig(command="sol", colour="red")  # type: ignore[call-arg]

    def test_unknown_command(self):
        """Test the command literal."""
        with pytest.raises(ValidationError):
            RunConfig(command="everything")  # type: ignore[arg-type]


class TestReport:
    """Test the report model."""

    def test_summary_success(self):
        """Test that errors count as failures."""
        assert ReportSummary(total=3, failed=0).passed
        assert not ReportSummary(total=3, failed=1).passed
        assert not ReportSummary(total=3, failed=0, errors=["sol: boom"]).passed

    def test_to_json_uses_aliases(self):
        """Test the record keys of the JSON output."""
        data = json.loads(make_report([make_record()]).to_json())
        assert data["records"][0]["pass"] is True
        assert data["records"][0]["paper_anchor"] == "sol-ricci"
        assert "anchor" not in data["records"][0]
        assert data["summary"]["passed"] is True
        assert data["wall_time"] == 1.25
        assert data["config"]["command"] == "sol"

    def test_to_json_without_wall_time(self):
        """Test that timing can be left out for reproducible output."""
        first = make_report([make_record()], wall_time=1.0).to_json(include_wall_time=False)
        second = make_report([make_record()], wall_time=2.0).to_json(include_wall_time=False)
        assert first == second
        assert "wall_time" not in json.loads(first)

    def test_failed_records(self):
        """Test filtering of failing records."""
        report = make_report([make_record("a"), make_record("b", passed=False, residual=1.0)])
        assert [r.name for r in report.failed_records()] == ["b"]
        assert not report.passed


class TestRenderTable:
    """Test console rendering."""

    def test_table_lists_records(self):
        """Test rows and the status line."""
        console = Console(record=True, width=200)
        report = make_report([make_record("a"), make_record("b", passed=False, residual=1.0)])
        table = render_table(report, console)
        assert table.row_count == 2
        text = console.export_text()
        assert "FAIL" in text
        assert "1/2 checks passed" in text

    def test_failures_only(self):
        """Test that passing records can be hidden."""
        console = Console(record=True, width=200)
        report = make_report([make_record("a"), make_record("b", passed=False, residual=1.0)])
        assert render_table(report, console, failures_only=True).row_count == 1

    def test_errors_are_listed(self):
        """Test that suite errors are printed below the table."""
        console = Console(record=True, width=200)
        report = make_report([make_record()])
        report.summary.errors.append("offsets: SingularOffsetMetricError: det 0")
        render_table(report, console)
        assert "SingularOffsetMetricError" in console.export_text()
