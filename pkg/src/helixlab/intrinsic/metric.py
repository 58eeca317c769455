"""Riemannian metrics on chart boxes with first and second partials."""

from collections.abc import Callable
from dataclasses import dataclass, field
from typing import Any

import numpy as np
import structlog
from numpy.typing import ArrayLike

from helixlab.immersions.chart import ImmersionChart
from helixlab.numerics.jets import ScalarField, fd_derivative
from helixlab.numerics.linalg import Array, inv, sym_eig
from helixlab.numerics.sampling import sample_box
from helixlab.utils.exceptions import ContractViolation, NonPositiveDefiniteError

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class MetricJet:
    """Metric matrix with ``dg[c, a, b] = ∂_c g_ab`` and ``ddg[c, d, a, b] = ∂_c ∂_d g_ab``."""

    g: Array
    dg: Array
    ddg: Array | None = None


@dataclass(frozen=True, eq=False)
class MetricChart:
    """A metric field g(u) on an open box of R^m.

    ``jet_fn(u, second)`` returns the metric jet, including second partials
    only when ``second`` is true.
    """

    name: str
    m: int
    domain: Array
    jet_fn: Callable[[Array, bool], MetricJet]
    params: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        domain = np.asarray_chkfinite(self.domain, dtype=np.float64)
        if domain.shape != (self.m, 2) or np.any(domain[:, 0] >= domain[:, 1]):
            raise ContractViolation(f"{self.name}: domain must be a nonempty box of shape ({self.m}, 2)")
        object.__setattr__(self, "domain", domain)

    @property
    def center(self) -> Array:
        return self.domain.mean(axis=1)  # type: ignore[no-any-return]

    def jet(self, u: ArrayLike, second: bool = True) -> MetricJet:
        point = np.asarray_chkfinite(u, dtype=np.float64)
        if point.shape != (self.m,):
            raise ContractViolation(f"{self.name}: expected a point of R^{self.m}")
        return self.jet_fn(point, second)

    def g(self, u: ArrayLike) -> Array:
        return self.jet(u, second=False).g

    def sample_points(self, rng: np.random.Generator, count: int, fd_step: float = 1e-5) -> Array:
        return sample_box(self.domain, rng, count, fd_step)

    def check_positive(self, u: ArrayLike) -> MetricJet:
        """Return the full jet after verifying positive definiteness.

        Raises:
            NonPositiveDefiniteError: If the smallest eigenvalue is not positive.
        """
        jet = self.jet(u)
        eigenvalues, _ = sym_eig(jet.g)
        if eigenvalues[-1] <= 0.0:
            raise NonPositiveDefiniteError(
                f"{self.name}: metric is not positive definite (min eigenvalue {eigenvalues[-1]:.3e})"
            )
        return jet


def flat_metric(m: int = 2) -> MetricChart:
    """Euclidean metric on the same box as the flat immersion chart."""
    domain = np.array([[0.2, 1.5]] + [[-1.0, 1.0]] * (m - 1))
    jet = MetricJet(np.eye(m), np.zeros((m, m, m)), np.zeros((m, m, m, m)))
    return MetricChart(name=f"flat(m={m})", m=m, domain=domain, jet_fn=lambda u, second: jet, params={"m": m})


def polar_metric() -> MetricChart:
    """Flat plane in polar coordinates (r, θ): dr² + r² dθ²."""

    def jet(u: Array, second: bool) -> MetricJet:
        r = float(u[0])
        dg = np.zeros((2, 2, 2))
        dg[0, 1, 1] = 2.0 * r
        ddg = np.zeros((2, 2, 2, 2))
        ddg[0, 0, 1, 1] = 2.0
        return MetricJet(np.diag([1.0, r * r]), dg, ddg if second else None)

    return MetricChart(name="polar", m=2, domain=np.array([[0.5, 2.0], [-3.0, 3.0]]), jet_fn=jet)


def sol_metric() -> MetricChart:
    """Sol geometry e^{2z} dx² + e^{-2z} dy² + dz² on coordinates (x, y, z)."""

    def jet(u: Array, second: bool) -> MetricJet:
        ep, em = np.exp(2.0 * u[2]), np.exp(-2.0 * u[2])
        dg = np.zeros((3, 3, 3))
        dg[2] = np.diag([2.0 * ep, -2.0 * em, 0.0])
        ddg = None
        if second:
            ddg = np.zeros((3, 3, 3, 3))
            ddg[2, 2] = np.diag([4.0 * ep, 4.0 * em, 0.0])
        return MetricJet(np.diag([ep, em, 1.0]), dg, ddg)

    return MetricChart(name="sol", m=3, domain=np.array([[-1.0, 1.0]] * 3), jet_fn=jet)


def pullback_metric(chart: ImmersionChart, fd_step: float = 1e-5) -> MetricChart:
    """Induced metric ``J^T J`` of an immersion.

    First partials are exact from the second jet; second partials are central
    differences of the exact first partials.
    """

    def first(u: Array) -> tuple[Array, Array]:
        jet = chart.jet(u)
        jac, hess = jet.jacobian, jet.hessians
        cross = np.einsum("nca,nb->cab", hess, jac)
        return jac.T @ jac, cross + cross.transpose(0, 2, 1)

    def jet(u: Array, second: bool) -> MetricJet:
        g, dg = first(u)
        ddg = fd_derivative(lambda w: first(w)[1], u, fd_step) if second else None
        if ddg is not None:
            ddg = 0.5 * (ddg + ddg.transpose(1, 0, 2, 3))
        return MetricJet(g, dg, ddg)

    return MetricChart(
        name=f"pullback({chart.name})",
        m=chart.m,
        domain=chart.domain,
        jet_fn=jet,
        params={"chart": chart.name},
    )


def helix_metric(metric: MetricChart, f: ScalarField) -> MetricChart:
    """The metric h = g + df ⊗ df of the graph of f over (B, g).

    Second partials need third derivatives of f.
    """
    if f.m != metric.m:
        raise ContractViolation(f"field {f.name} lives on R^{f.m}, metric on R^{metric.m}")

    def jet(u: Array, second: bool) -> MetricJet:
        base = metric.jet(u, second)
        s = f.jet(u)
        df, ddf = s.grad, s.hess
        g = base.g + np.outer(df, df)
        dg = base.dg + np.einsum("ca,b->cab", ddf, df) + np.einsum("a,cb->cab", df, ddf)
        ddg = None
        if second:
            if s.third is None or base.ddg is None:
                raise ContractViolation(f"{f.name}: third derivatives are required for curvature of h")
            t = s.third
            ddg = (
                base.ddg
                + np.einsum("cda,b->cdab", t, df)
                + np.einsum("ca,db->cdab", ddf, ddf)
                + np.einsum("da,cb->cdab", ddf, ddf)
                + np.einsum("a,cdb->cdab", df, t)
            )
        return MetricJet(g, dg, ddg)

    return MetricChart(
        name=f"helix({metric.name}, {f.name})",
        m=metric.m,
        domain=metric.domain,
        jet_fn=jet,
        params={"metric": metric.name, "field": f.name},
    )


def linear_chart_change(
    metric: MetricChart,
    a: ArrayLike,
    b: ArrayLike | None = None,
    domain: ArrayLike | None = None,
) -> MetricChart:
    """Pull a metric back through the affine coordinate change u = A w + b.

    When no domain is given, a box around ``A^{-1}(center - b)`` is chosen
    whose image stays inside the original domain.
    """
    mat = np.asarray_chkfinite(a, dtype=np.float64)
    shift = np.zeros(metric.m) if b is None else np.asarray_chkfinite(b, dtype=np.float64)
    if mat.shape != (metric.m, metric.m):
        raise ContractViolation("chart change matrix must be square of the metric dimension")
    mat_inv = inv(mat)
    if domain is None:
        center_w = mat_inv @ (metric.center - shift)
        half = 0.5 * (metric.domain[:, 1] - metric.domain[:, 0])
        delta = float(np.min(half / np.sum(np.abs(mat), axis=1)))
        new_domain = np.column_stack([center_w - delta, center_w + delta])
    else:
        new_domain = np.asarray_chkfinite(domain, dtype=np.float64)

    def jet(w: Array, second: bool) -> MetricJet:
        base = metric.jet(mat @ w + shift, second)
        g = mat.T @ base.g @ mat
        dg = np.einsum("ec,eij,ia,jb->cab", mat, base.dg, mat, mat)
        ddg = None
        if base.ddg is not None:
            ddg = np.einsum("ec,fd,efij,ia,jb->cdab", mat, mat, base.ddg, mat, mat)
        return MetricJet(g, dg, ddg)

    return MetricChart(
        name=f"linear_change({metric.name})",
        m=metric.m,
        domain=new_domain,
        jet_fn=jet,
        params={"metric": metric.name},
    )
