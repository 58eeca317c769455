"""Check orchestrator to run the suites of a command and assemble the report."""

import time

import numpy as np
import structlog

from helixlab.checks.analyze import AnalyzeSuite
from helixlab.checks.base import BaseCheckSuite, resolve_chart
from helixlab.checks.harness import HarnessSuite
from helixlab.checks.lemma import LemmaSuite
from helixlab.checks.offsets import OffsetsSuite, normal_field
from helixlab.checks.project import ProjectSuite
from helixlab.checks.sol import SolSuite
from helixlab.config.logging import OperationTimer, RunSummary, SuiteStats
from helixlab.config.settings import Settings
from helixlab.geometry.helix import unit_direction
from helixlab.immersions.catalog import cone, tilted_plane
from helixlab.report.models import CheckRecord, Report, ReportSummary, RunConfig
from helixlab.utils.exceptions import ConfigurationError, HelixLabError

logger = structlog.get_logger(__name__)

CONE_SLOPES = (0.5, 1.0, 2.0)


class CheckOrchestrator:
    """Runs the suites of one command and turns their records into a report."""

    def __init__(self, config: RunConfig, settings: Settings) -> None:
        """Initialize the orchestrator.

        Args:
            config: Validated run configuration.
            settings: Application settings.
        """
        self.config = config
        self.settings = settings
        self.summary: RunSummary | None = None

    def preflight(self) -> None:
        """Resolve the chart, field and direction inputs before any suite runs.

        Raises:
            ConfigurationError: If an input cannot be resolved.
        """
        config = self.config
        try:
            if config.command == "offsets" and config.chart is not None:
                normal_field(config.chart)
            elif config.command in ("analyze", "project"):
                chart = resolve_chart(config)
                if config.direction is not None:
                    unit_direction(config.direction, chart.n)
        except HelixLabError as e:
            raise ConfigurationError(str(e)) from e

    def build_suites(self) -> list[BaseCheckSuite]:
        """Suites for the configured command, in report order."""
        config, settings = self.config, self.settings
        command = config.command
        if command == "analyze":
            return [AnalyzeSuite(config, settings)]
        if command == "offsets":
            return [OffsetsSuite(config, settings)]
        if command == "lemma-la":
            return [LemmaSuite(config, settings)]
        if command == "sol":
            return [SolSuite(config, settings)]
        if command == "project":
            return [ProjectSuite(config, settings)]

        # suite: every acceptance family with its catalog inputs
        neutral = config.model_copy(update={"chart": None, "spec": None, "direction": None, "t_grid": None})
        analyses: list[BaseCheckSuite] = [AnalyzeSuite(neutral, settings, chart=cone(k)) for k in CONE_SLOPES]
        analyses.append(AnalyzeSuite(neutral, settings, chart=tilted_plane()))
        return [
            SolSuite(neutral, settings),
            OffsetsSuite(neutral, settings),
            LemmaSuite(neutral, settings),
            ProjectSuite(neutral, settings),
            *analyses,
            HarnessSuite(neutral, settings),
        ]

    def _run_suite(self, suite: BaseCheckSuite, summary: RunSummary) -> list[CheckRecord]:
        stats = SuiteStats(suite=suite.name)
        # every suite draws from its own generator seeded alike, so a suite
        # reports the same values alone and inside the full run
        rng = np.random.default_rng(self.config.seed)
        try:
            with OperationTimer("suite", logger, suite=suite.name):
                records = suite.run(rng)
        except HelixLabError as e:
            if self.config.error_handling == "strict":
                logger.error("Run aborted due to strict error handling", suite=suite.name, error=str(e))
                raise
            logger.error("Suite failed", suite=suite.name, error=str(e))
            stats.add_error(f"{suite.name}: {e}")
            records = [
                *suite.records,
                CheckRecord(
                    suite=suite.name,
                    name="suite_error",
                    anchor="suite-error",
                    lhs=None,
                    rhs=None,
                    residual=None,
                    tol=self.config.tol,
                    passed=False,
                    detail=f"{type(e).__name__}: {e}",
                ),
            ]
        stats.checks_run = len(records)
        stats.checks_passed = sum(1 for r in records if r.passed)
        stats.finish()
        summary.add_stats(stats)
        logger.info("Suite complete", **stats.to_dict())
        return records

    def run(self) -> Report:
        """Run every suite of the command.

        Returns:
            The report; ``passed`` is true only if every record passed and no
            suite raised.

        Raises:
            HelixLabError: The first suite error in strict mode.
        """
        start = time.perf_counter()
        summary = RunSummary(command=self.config.command)
        records: list[CheckRecord] = []
        suite_status: dict[str, bool] = {}

        for suite in self.build_suites():
            suite_records = self._run_suite(suite, summary)
            records.extend(suite_records)
            suite_status[suite.name] = summary.stats[-1].success

        summary.finish()
        self.summary = summary
        logger.info("Run complete", **summary.to_dict())

        errors = [error for stats in summary.stats for error in stats.errors]
        failed = sum(1 for r in records if not r.passed)
        return Report(
            version=self.settings.report_version,
            command=self.config.command,
            config=self.config,
            records=records,
            summary=ReportSummary(total=len(records), failed=failed, errors=errors, suites=suite_status),
            passed=summary.success,
            wall_time=time.perf_counter() - start,
        )
