"""Comparison of (B, g) with (B, h), h = g + df ⊗ df, for an eikonal f.

Each relation is evaluated twice: the left side directly on the h metric
chart through the generic curvature machinery, the right side from the
closed-form expression in g-quantities.
"""

from dataclasses import dataclass

import numpy as np
import structlog
from numpy.typing import ArrayLike

from helixlab.intrinsic.curvature import (
    christoffels,
    eikonal_check,
    gradient,
    gradient_self_derivative,
    hessian,
    laplacian,
    norm,
    orthonormal_frame,
    riemann,
)
from helixlab.intrinsic.metric import MetricChart, helix_metric
from helixlab.numerics.comparison import Comparison
from helixlab.numerics.jets import ScalarField
from helixlab.utils.exceptions import NotEikonalError

logger = structlog.get_logger(__name__)

EIKONAL_TOL = 1e-6
EIKONAL_SAMPLES = 20


@dataclass(frozen=True)
class ComparisonReport:
    """All relations between g and h at one point."""

    u: list[float]
    gradient_norm_sq: float
    relations: list[Comparison]

    def max_residual(self) -> float:
        return max(r.residual for r in self.relations)


def _require_eikonal(metric: MetricChart, f: ScalarField, rng: np.random.Generator | None) -> None:
    report = eikonal_check(metric, f, EIKONAL_SAMPLES, EIKONAL_TOL, rng)
    if not report.is_eikonal:
        raise NotEikonalError(f"{f.name} is not eikonal on {metric.name} (spread {report.spread:.3e})")


def comparison_report(
    metric: MetricChart,
    f: ScalarField,
    u: ArrayLike,
    rng: np.random.Generator | None = None,
) -> ComparisonReport:
    """Evaluate the volume, gradient, connection, Hessian, Laplacian and
    Ricci relations, plus the frame form of h and Hess f(∇f, ·) = 0.

    Raises:
        NotEikonalError: If |∇f| varies over the chart by more than 1e-6.
    """
    _require_eikonal(metric, f, rng)
    point = np.asarray(u, dtype=np.float64)
    h = helix_metric(metric, f)

    g_mat, h_mat = metric.g(point), h.g(point)
    grad_g = gradient(metric, f, point)
    w = float(grad_g @ g_mat @ grad_g)
    scale = 1.0 + w
    hess_g = hessian(metric, f, point)

    relations = [
        Comparison.scalar(
            "volume_form",
            "volume-form",
            np.sqrt(np.linalg.det(h_mat)),
            np.sqrt(scale) * np.sqrt(np.linalg.det(g_mat)),
        ),
        Comparison.tensor("gradient", "gradient-relation", gradient(h, f, point), grad_g / scale),
        Comparison.tensor(
            "connection",
            "connection-relation",
            christoffels(h, point),
            christoffels(metric, point) + np.einsum("ij,k->kij", hess_g, grad_g) / scale,
        ),
        Comparison.tensor("hessian", "hessian-relation", hessian(h, f, point), hess_g / scale),
        Comparison.scalar(
            "laplacian", "laplacian-relation", laplacian(h, f, point), laplacian(metric, f, point) / scale
        ),
    ]

    grad_h = gradient(h, f, point)
    ric_h = riemann(h, point).ricci
    ric_g = riemann(metric, point).ricci
    relations.append(
        Comparison.scalar(
            "ricci_along_gradient",
            "ricci-relation",
            grad_h @ ric_h @ grad_h,
            (grad_g @ ric_g @ grad_g) / scale**2,
        )
    )
    relations.append(Comparison.tensor("hessian_gradient", "hessian-gradient", hess_g @ grad_g, np.zeros_like(grad_g)))

    if w > 0.0:
        frame = orthonormal_frame(g_mat, grad_g)
        expected = np.eye(metric.m)
        expected[0, 0] = scale
        relations.append(Comparison.tensor("frame_metric", "frame-metric", frame.T @ h_mat @ frame, expected))

    report = ComparisonReport(u=point.tolist(), gradient_norm_sq=w, relations=relations)
    logger.debug("Comparison report", metric=metric.name, field=f.name, max_residual=report.max_residual())
    return report


def ricci_gradient_check(metric: MetricChart, f: ScalarField, u: ArrayLike) -> float:
    """Ric_g(∇f, ∇f) at ``u``."""
    grad = gradient(metric, f, u)
    return float(grad @ riemann(metric, u).ricci @ grad)


def gradient_geodesic_check(metric: MetricChart, f: ScalarField, u: ArrayLike) -> list[Comparison]:
    """Acceleration of the integral lines of ∇_g f in g and of ∇_h f in h.

    Both vanish for eikonal f: the gradient lines are geodesics of each metric.
    """
    point = np.asarray(u, dtype=np.float64)
    h = helix_metric(metric, f)
    acc_g = gradient_self_derivative(metric, f, point)
    acc_h = gradient_self_derivative(h, f, point)
    return [
        Comparison.scalar("gradient_geodesic_g", "gradient-geodesic", norm(metric, point, acc_g), 0.0),
        Comparison.scalar("gradient_geodesic_h", "gradient-geodesic", norm(h, point, acc_h), 0.0),
    ]
