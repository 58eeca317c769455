"""The projection method: graph charts over a base and the metric h = g + df ⊗ df."""

import numpy as np
import structlog

from helixlab.checks.base import BaseCheckSuite
from helixlab.geometry.helix import formulae_verdict, graph_formula_corpus, projection_formulae
from helixlab.immersions.catalog import from_selector
from helixlab.immersions.chart import ImmersionChart
from helixlab.immersions.fields import coordinate, linear, radial
from helixlab.intrinsic.comparison import comparison_report, gradient_geodesic_check, ricci_gradient_check
from helixlab.intrinsic.curvature import laplacian
from helixlab.intrinsic.metric import MetricChart, flat_metric, helix_metric, polar_metric
from helixlab.numerics.comparison import Comparison
from helixlab.numerics.jets import ScalarField
from helixlab.report.models import CheckRecord

logger = structlog.get_logger(__name__)

FORMULAE_TOL = 1e-5
FORMULAE_SAMPLES = 20
POINT_SAMPLES = 3
TILT_ANGLES = (0.3, 0.7, 1.2)
# Δ_B f and the mean-curvature identity are values, not identities, off the minimal graphs
IDENTITY_RECORDS = frozenset({"graph_normal", "normal_trace", "pushforward_T", "angle_identity"})


def comparison_cases() -> list[tuple[str, MetricChart, ScalarField]]:
    """Eikonal pairs (g, f): the radial distance in Cartesian and polar
    coordinates and the linear heights of the tilted planes."""
    flat = flat_metric(2)
    cases = [
        ("radial", flat, radial(2, 1.0)),
        ("polar_radius", polar_metric(), coordinate(2, 0)),
    ]
    cases.extend((f"tilted(theta={theta:g})", flat, linear([np.tan(theta), 0.0])) for theta in TILT_ANGLES)
    return cases


class ProjectSuite(BaseCheckSuite):
    """Graph minimality against the base conditions, and g against h."""

    suite = "project"

    def run(self, rng: np.random.Generator) -> list[CheckRecord]:
        corpus = graph_formula_corpus()
        if self.config.chart is not None:
            chart = from_selector(self.config.chart)
            if chart.graph_of is None:
                logger.warning("Chart is not a graph chart, using the corpus only", chart=chart.name)
            else:
                verdict = formulae_verdict(chart, FORMULAE_SAMPLES, FORMULAE_TOL, rng)
                corpus.append((chart, verdict.graph_minimal))

        for chart, expected in corpus:
            self._graph_checks(chart, expected, rng)

        for label, metric, f in comparison_cases():
            self._metric_checks(label, metric, f, rng)
        return self.records

    def _graph_checks(self, chart: ImmersionChart, expected: bool, rng: np.random.Generator) -> None:
        verdict = formulae_verdict(chart, FORMULAE_SAMPLES, FORMULAE_TOL, rng)
        self.check(
            Comparison.flag(
                f"formulae[{chart.name}]",
                "projection-formulae",
                verdict.agree and verdict.graph_minimal == expected,
                note=(
                    f"minimal={verdict.graph_minimal}, base_conditions={verdict.base_conditions}, "
                    f"laplacian={verdict.max_laplacian:.2e}, mean={verdict.max_mean_residual:.2e}"
                ),
            )
        )
        u = chart.sample_points(rng, 1)[0]
        for comparison in projection_formulae(chart, u):
            if comparison.name in IDENTITY_RECORDS:
                self.check(comparison.tagged(chart.name), tol=FORMULAE_TOL, relative=True)

    def _metric_checks(self, label: str, metric: MetricChart, f: ScalarField, rng: np.random.Generator) -> None:
        for i, u in enumerate(metric.sample_points(rng, POINT_SAMPLES)):
            tag = f"{label}:{i}"
            report = comparison_report(metric, f, u, rng)
            for comparison in report.relations + gradient_geodesic_check(metric, f, u):
                self.check(comparison.tagged(tag), tol=FORMULAE_TOL, relative=True)
            self.check(
                Comparison.scalar(f"ricci_gradient[{tag}]", "ricci-relation", ricci_gradient_check(metric, f, u), 0.0),
                tol=FORMULAE_TOL,
            )
            if label == "radial":
                r = float(np.linalg.norm(u))
                self.check(
                    Comparison.scalar(
                        f"radial_laplacian[{tag}]",
                        "laplacian-relation",
                        laplacian(helix_metric(metric, f), f, u),
                        1.0 / (2.0 * r),
                    ),
                    tol=FORMULAE_TOL,
                    relative=True,
                )
