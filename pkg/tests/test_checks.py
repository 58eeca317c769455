"""Tests for the check suites and the orchestrator."""

import json

import numpy as np
import pytest

from helixlab.checks.analyze import AnalyzeSuite
from helixlab.checks.base import BaseCheckSuite, resolve_chart, resolve_direction
from helixlab.checks.harness import HarnessSuite
from helixlab.checks.lemma import LemmaSuite
from helixlab.checks.offsets import OffsetsSuite, normal_field
from helixlab.checks.orchestrator import CheckOrchestrator
from helixlab.checks.project import ProjectSuite
from helixlab.checks.sol import SolSuite
from helixlab.immersions.catalog import cone
from helixlab.numerics.comparison import Comparison
from helixlab.report.models import CheckRecord
from helixlab.utils.exceptions import ConfigurationError, ContractViolation, InvalidChartError


class ExplodingSuite(BaseCheckSuite):
    """Records one check, then fails."""

    suite = "exploding"

    def run(self, rng: np.random.Generator) -> list[CheckRecord]:
        self.check(Comparison.scalar("before_failure", "sol-ricci", 0.0, 0.0))
        raise ContractViolation("boom")


class ExplodingOrchestrator(CheckOrchestrator):
    def build_suites(self) -> list[BaseCheckSuite]:
        return [ExplodingSuite(self.config, self.settings), SolSuite(self.config, self.settings)]


def failures(records: list[CheckRecord]) -> list[str]:
    return [f"{r.name}: residual={r.residual} tol={r.tol}" for r in records if not r.passed]


class TestResolution:
    """Test chart and direction resolution."""

    def test_default_chart_and_direction(self, make_config):
        """Test the tilted plane and the last axis as defaults."""
        config = make_config("analyze")
        chart = resolve_chart(config)
        assert chart.name.startswith("tilted_plane")
        np.testing.assert_array_equal(resolve_direction(config, 3), [0.0, 0.0, 1.0])

    def test_chart_selector(self, make_config):
        """Test --chart with parameters."""
        assert resolve_chart(make_config("analyze", chart="cone:k=2")).params["k"] == 2.0

    def test_unknown_normal_field(self):
        """Test the field lookup of the offsets command."""
        with pytest.raises(InvalidChartError, match="unknown normal field"):
            normal_field("hairy_ball")


class TestSolSuite:
    """Test the Sol suite."""

    def test_all_records_pass(self, make_config, test_settings, rng):
        """Test every Sol table entry."""
        records = SolSuite(make_config("sol"), test_settings).run(rng)
        assert records
        assert not failures(records)
        assert all(r.suite == "sol" for r in records)


class TestLemmaSuite:
    """Test the trace identity suite."""

    def test_decision_and_closed_forms(self, make_config, test_settings, rng):
        """Test the zero triple, the closed forms and the false-positive count."""
        config = make_config("lemma-la", trials=30, max_k=3)
        records = LemmaSuite(config, test_settings).run(rng)
        by_name = {r.name: r for r in records}
        assert by_name["zero_triple_decision"].passed
        assert by_name["false_positives"].passed
        assert by_name["false_positives"].lhs == 0.0
        closed = [r for r in records if r.anchor == "trace-closed-form"]
        assert len(closed) == 6
        assert all(r.passed for r in closed)
        kernel = [r for r in records if r.name.startswith(("kernel_", "block_"))]
        assert kernel
        assert all(r.passed for r in kernel)


class TestAnalyzeSuite:
    """Test the analysis suite on helices."""

    def test_tilted_plane(self, make_config, test_settings, rng):
        """Test a tilted plane against e3."""
        suite = AnalyzeSuite(make_config("analyze", chart="tilted_plane:theta=0.7"), test_settings)
        records = suite.run(rng)
        assert not failures(records)
        by_name = {r.name: r for r in records}
        assert "is_helix=True" in (by_name["helix_angle"].detail or "")
        assert by_name["helix_angle"].lhs == pytest.approx(0.7, abs=1e-10)
        assert any(r.anchor == "structure-equation" for r in records)

    def test_cone(self, make_config, test_settings, rng):
        """Test the cone, a non-minimal helix hypersurface."""
        suite = AnalyzeSuite(make_config("analyze"), test_settings, chart=cone(2.0))
        records = suite.run(rng)
        assert suite.name == f"analyze[{cone(2.0).name}]"
        assert not failures(records)
        by_name = {r.name: r for r in records}
        assert "minimal=False" in (by_name["is_minimal"].detail or "")
        assert any(r.anchor == "ricci-tangent" for r in records)
        assert "gauss_image_spread" in by_name

    def test_non_helix_skips_helix_identities(self, make_config, test_settings, rng):
        """Test that a sphere only gets the identities valid on every chart."""
        records = AnalyzeSuite(make_config("analyze", chart="round_sphere"), test_settings).run(rng)
        assert not any(r.anchor == "structure-equation" for r in records)
        assert any(r.anchor == "laplacian-height" for r in records)


class TestOffsetsSuite:
    """Test the offsets suite."""

    def test_named_field(self, make_config, test_settings, rng):
        """Test parallel planes."""
        records = OffsetsSuite(make_config("offsets", chart="tilted_plane_normal"), test_settings).run(rng)
        assert not failures(records)
        anchors = {r.anchor for r in records}
        assert {"offset-metric", "trace-of-shape", "offsets-corollary", "lemma-bridge", "foliation-flatness"} <= anchors

    def test_corpus_size(self, make_config, test_settings, rng):
        """Test that each corpus entry gets its certificate."""
        records = OffsetsSuite(make_config("offsets"), test_settings, corpus_size=3).run(rng)
        assert sum(1 for r in records if r.anchor == "offsets-corollary") == 3


@pytest.mark.slow
class TestSlowSuites:
    """Test the projection and harness suites."""

    def test_project(self, make_config, test_settings, rng):
        """Test graph formulae and the metric relations."""
        records = ProjectSuite(make_config("project"), test_settings).run(rng)
        assert not failures(records)
        assert any(r.anchor == "projection-formulae" for r in records)

    def test_harness(self, make_config, test_settings, rng):
        """Test that the harness finds no counterexample."""
        records = HarnessSuite(make_config("suite", samples=20), test_settings).run(rng)
        assert records
        assert all(r.passed for r in records)


class TestOrchestrator:
    """Test the orchestrator."""

    @pytest.mark.parametrize(
        "command,overrides",
        [
            ("analyze", {"chart": "not_a_chart"}),
            ("offsets", {"chart": "not_a_field"}),
            ("analyze", {"chart": "cone", "direction": [1.0, 0.0]}),
        ],
        ids=["chart", "field", "direction"],
    )
    def test_preflight(self, command, overrides, make_config, test_settings):
        """Test that unresolvable inputs become configuration errors."""
        with pytest.raises(ConfigurationError):
            CheckOrchestrator(make_config(command, **overrides), test_settings).preflight()

    def test_report(self, make_config, test_settings):
        """Test the report of a passing command."""
        orchestrator = CheckOrchestrator(make_config("sol"), test_settings)
        report = orchestrator.run()
        assert report.passed
        assert report.summary.total == len(report.records)
        assert report.summary.suites == {"sol": True}
        assert orchestrator.summary is not None
        assert orchestrator.summary.total_checks == report.summary.total

    def test_lenient_error_handling(self, make_config, test_settings):
        """Test that a failing suite becomes a suite_error record and the run continues."""
        report = ExplodingOrchestrator(make_config("sol"), test_settings).run()
        assert not report.passed
        errors = [r for r in report.records if r.anchor == "suite-error"]
        assert len(errors) == 1
        assert errors[0].detail == "ContractViolation: boom"
        assert any(r.name == "before_failure" for r in report.records)
        assert report.summary.suites["exploding"] is False
        assert report.summary.suites["sol"] is True
        assert report.summary.errors == ["exploding: boom"]

    def test_strict_error_handling(self, make_config, strict_settings):
        """Test that strict mode re-raises."""
        config = make_config("sol", error_handling="strict")
        with pytest.raises(ContractViolation):
            ExplodingOrchestrator(config, strict_settings).run()

    def test_deterministic(self, make_config, test_settings):
        """Test that equal seeds give identical reports apart from timing."""
        first = CheckOrchestrator(make_config("sol", seed=5), test_settings).run()
        second = CheckOrchestrator(make_config("sol", seed=5), test_settings).run()
        assert first.to_json(include_wall_time=False) == second.to_json(include_wall_time=False)

    @pytest.mark.slow
    @pytest.mark.acceptance
    def test_full_suite(self, make_config, test_settings):
        """Test every acceptance family with the default seed."""
        report = CheckOrchestrator(make_config("suite", samples=20), test_settings).run()
        assert report.passed, failures(report.records)
        data = json.loads(report.to_json())
        assert {"sol", "offsets", "lemma-la", "project", "main-theorem"} <= set(data["summary"]["suites"])
