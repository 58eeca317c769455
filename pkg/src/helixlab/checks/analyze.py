"""Extrinsic and helix analysis of one chart against one direction."""

import numpy as np
import structlog

from helixlab.checks.base import BaseCheckSuite, resolve_chart, resolve_direction
from helixlab.config.settings import Settings
from helixlab.geometry.extrinsic import gauss_ricci, minimality_report
from helixlab.geometry.helix import (
    BRACKET_STEP,
    complex_helix_checks,
    gauss_image_check,
    is_helix,
    laplacian_height_check,
    ricci_T_check,
    structure_equation_residual,
)
from helixlab.immersions.chart import ImmersionChart
from helixlab.intrinsic.curvature import riemann
from helixlab.intrinsic.metric import pullback_metric
from helixlab.numerics.comparison import Comparison
from helixlab.numerics.linalg import Array
from helixlab.report.models import CheckRecord, RunConfig
from helixlab.utils.exceptions import NonComplexSubmanifoldError

logger = structlog.get_logger(__name__)

POINT_SAMPLES = 5


class AnalyzeSuite(BaseCheckSuite):
    """Minimality, helix classification and the pointwise helix identities."""

    suite = "analyze"

    def __init__(
        self,
        config: RunConfig,
        settings: Settings,
        chart: ImmersionChart | None = None,
        direction: Array | None = None,
    ) -> None:
        super().__init__(config, settings)
        self.chart = chart if chart is not None else resolve_chart(config)
        self.direction = direction if direction is not None else resolve_direction(config, self.chart.n)

    @property
    def name(self) -> str:
        return f"{self.suite}[{self.chart.name}]"

    def run(self, rng: np.random.Generator) -> list[CheckRecord]:
        chart, d, tol = self.chart, self.direction, self.config.tol
        samples = self.config.samples

        minimality = minimality_report(chart, samples, self.settings.minimality_tol, rng, self.tolerances.fd_step)
        self.observe("is_minimal", "minimality", minimality.max_norm, f"minimal={minimality.is_minimal}")

        report = is_helix(chart, d, samples, tol, rng)
        self.observe(
            "helix_angle",
            "helix-angle",
            report.angle_mean,
            f"is_helix={report.is_helix}, spread={report.angle_spread:.2e}",
        )
        self.observe("is_cylinder", "cylinder", report.angle_mean, f"is_cylinder={report.is_cylinder}")
        if report.criteria_agree is not None:
            self.check(Comparison.flag("eikonal_criterion", "eikonal-helix", report.criteria_agree))
        if report.is_ruled is not None:
            self.observe("is_ruled", "ruled", report.ruled_residual, f"is_ruled={report.is_ruled}")
        for note in report.notes:
            logger.info("Helix analysis note", chart=chart.name, note=note)

        helix_with_t = report.is_helix and not report.normal_direction
        hypersurface = chart.n == chart.m + 1
        metric = pullback_metric(chart, self.tolerances.fd_step)

        for i, u in enumerate(chart.sample_points(rng, POINT_SAMPLES)):
            heights = laplacian_height_check(chart, d, u, self.tolerances.fd_step)
            self.check(
                Comparison.scalar(f"laplacian_height[{i}]", "laplacian-height", heights.lhs, heights.rhs_mean_curvature),
                relative=True,
            )
            self.check(
                Comparison.scalar(f"laplacian_height_angle[{i}]", "laplacian-height", heights.lhs, heights.rhs_angle),
                relative=True,
            )
            self.check(
                Comparison.tensor(f"gauss_equation[{i}]", "gauss-equation", gauss_ricci(chart, u), riemann(metric, u).ricci),
                relative=True,
            )
            if not helix_with_t:
                continue
            self.check(
                Comparison.scalar(
                    f"structure_equation[{i}]", "structure-equation", structure_equation_residual(chart, d, u), 0.0
                )
            )
            if hypersurface:
                ricci_t = ricci_T_check(chart, d, u, fd_step=self.tolerances.fd_step)
                self.check(Comparison.scalar(f"ricci_tangent[{i}]", "ricci-tangent", ricci_t.ricci_tt, 0.0))
                self.check(Comparison.scalar(f"relative_nullity[{i}]", "relative-nullity", ricci_t.nullity_residual, 0.0))

        if report.is_helix and hypersurface:
            spread = gauss_image_check(chart, d, samples, rng).spread
            self.check(Comparison.scalar("gauss_image_spread", "gauss-image", spread, 0.0))

        if helix_with_t and chart.n % 2 == 0:
            self._complex_checks(chart, d, tol)

        return self.records

    def _complex_checks(self, chart: ImmersionChart, d: Array, tol: float) -> None:
        try:
            result = complex_helix_checks(chart, d, chart.center)
        except NonComplexSubmanifoldError as e:
            logger.debug("Skipping complex helix checks", chart=chart.name, reason=str(e))
            return
        self.check(Comparison.scalar("jt_geodesic", "complex-geodesic", result.jt_geodesic_residual, 0.0))
        # the flow commutator is only first-order accurate in its step
        self.check(
            Comparison.scalar("t_jt_bracket", "complex-bracket", result.bracket_residual, 0.0),
            tol=max(tol, 10.0 * BRACKET_STEP),
        )
