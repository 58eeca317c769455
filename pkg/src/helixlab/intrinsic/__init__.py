"""Intrinsic Riemannian geometry on metric charts."""

from helixlab.intrinsic.comparison import (
    ComparisonReport,
    comparison_report,
    gradient_geodesic_check,
    ricci_gradient_check,
)
from helixlab.intrinsic.curvature import (
    CURVATURE_SIGN,
    CurvaturePack,
    EikonalReport,
    christoffels,
    eikonal_check,
    gradient,
    gradient_norm,
    hessian,
    laplacian,
    orthonormal_frame,
    ricci,
    riemann,
)
from helixlab.intrinsic.metric import (
    MetricChart,
    MetricJet,
    flat_metric,
    helix_metric,
    linear_chart_change,
    polar_metric,
    pullback_metric,
    sol_metric,
)
from helixlab.intrinsic.sol import sol_verification

__all__ = [
    "CURVATURE_SIGN",
    "ComparisonReport",
    "CurvaturePack",
    "EikonalReport",
    "MetricChart",
    "MetricJet",
    "christoffels",
    "comparison_report",
    "eikonal_check",
    "flat_metric",
    "gradient",
    "gradient_geodesic_check",
    "gradient_norm",
    "helix_metric",
    "hessian",
    "laplacian",
    "linear_chart_change",
    "orthonormal_frame",
    "polar_metric",
    "pullback_metric",
    "ricci",
    "ricci_gradient_check",
    "riemann",
    "sol_metric",
    "sol_verification",
]
