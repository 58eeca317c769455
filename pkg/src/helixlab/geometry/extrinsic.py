"""First and second fundamental forms, shape operators and mean curvature.

Sign convention: for a normal vector ξ the shape operator is
``A_ξ(X) = -(D_X ξ)^T``, dual to the second fundamental form through
``<A_ξ X, Y> = <α(X, Y), ξ>``. The mean curvature vector is the
unnormalized trace ``H = Σ_i α(E_i, E_i)``.
"""

from dataclasses import dataclass

import numpy as np
import structlog
from numpy.typing import ArrayLike

from helixlab.immersions.chart import ImmersionChart
from helixlab.numerics.jets import Jet2
from helixlab.numerics.linalg import Array, gram_schmidt, inv, orthonormal_complement
from helixlab.utils.exceptions import ContractViolation, DegenerateImmersionError

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class FramePack:
    """Orthonormal tangent and normal frames at a chart point.

    ``tangent`` has the frame vectors E_i as columns and satisfies
    ``tangent = jet.jacobian @ coefficients``.
    """

    u: Array
    jet: Jet2
    tangent: Array
    normal: Array
    coefficients: Array
    metric: Array
    metric_inv: Array

    @property
    def point(self) -> Array:
        return self.jet.value

    @property
    def m(self) -> int:
        return int(self.tangent.shape[1])

    @property
    def n(self) -> int:
        return int(self.tangent.shape[0])

    def tangent_part(self, v: ArrayLike) -> Array:
        vec = np.asarray(v, dtype=np.float64)
        return self.tangent @ (self.tangent.T @ vec)  # type: ignore[no-any-return]

    def normal_part(self, v: ArrayLike) -> Array:
        vec = np.asarray(v, dtype=np.float64)
        return self.normal @ (self.normal.T @ vec)  # type: ignore[no-any-return]

    def chart_velocity(self, v: ArrayLike) -> Array:
        """Chart-coordinate vector whose pushforward is the tangent part of ``v``."""
        vec = np.asarray(v, dtype=np.float64)
        return self.metric_inv @ (self.jet.jacobian.T @ vec)  # type: ignore[no-any-return]


@dataclass(frozen=True)
class ShapePack:
    """Second fundamental form at a point.

    ``alpha[k, i, j] = <α(E_i, E_j), ξ_k>``; in the orthonormal tangent frame
    this is also the matrix of the shape operator ``A_{ξ_k}``.
    """

    frames: FramePack
    alpha: Array
    mean_curvature: Array

    def shape_operator(self, xi: ArrayLike) -> Array:
        """Matrix of ``A_ξ`` in the tangent frame for any normal vector ξ."""
        coords = self.frames.normal.T @ np.asarray(xi, dtype=np.float64)
        return np.einsum("k,kij->ij", coords, self.alpha)  # type: ignore[no-any-return]

    def alpha_vector(self, x: ArrayLike, y: ArrayLike) -> Array:
        """Ambient normal vector α(X, Y) for frame-coordinate vectors X and Y."""
        values = np.einsum("kij,i,j->k", self.alpha, np.asarray(x), np.asarray(y))
        return self.frames.normal @ values  # type: ignore[no-any-return]


@dataclass(frozen=True)
class MinimalityReport:
    """Largest mean curvature norm over seeded samples."""

    max_norm: float
    is_minimal: bool
    sample_count: int
    worst_point: Array


def frames(chart: ImmersionChart, u: ArrayLike) -> FramePack:
    """Tangent frame by Gram-Schmidt on the jacobian columns, normals completed
    from the standard basis.

    Raises:
        DegenerateImmersionError: If the jacobian is rank deficient at ``u``.
    """
    jet = chart.check_rank(u)
    columns = gram_schmidt(list(jet.jacobian.T))
    if len(columns) < chart.m:
        raise DegenerateImmersionError(f"{chart.name}: jacobian columns are dependent")
    tangent = np.column_stack(columns)
    normal = orthonormal_complement(tangent, chart.n)
    g = jet.jacobian.T @ jet.jacobian
    g_inv = inv(g)
    coefficients = g_inv @ jet.jacobian.T @ tangent
    return FramePack(
        u=np.asarray(u, dtype=np.float64),
        jet=jet,
        tangent=tangent,
        normal=normal,
        coefficients=coefficients,
        metric=g,
        metric_inv=g_inv,
    )


def second_fundamental_form(chart: ImmersionChart, u: ArrayLike, pack: FramePack | None = None) -> ShapePack:
    """α from the exact second jet, projected on the normal frame."""
    fp = pack if pack is not None else frames(chart, u)
    normal_hess = np.einsum("nk,nab->kab", fp.normal, fp.jet.hessians)
    c = fp.coefficients
    alpha = np.einsum("ai,kab,bj->kij", c, normal_hess, c)
    alpha = 0.5 * (alpha + alpha.transpose(0, 2, 1))
    mean = fp.normal @ np.trace(alpha, axis1=1, axis2=2)
    return ShapePack(frames=fp, alpha=alpha, mean_curvature=mean)


def mean_curvature(chart: ImmersionChart, u: ArrayLike) -> Array:
    """Mean curvature vector H = Σ_i α(E_i, E_i)."""
    return second_fundamental_form(chart, u).mean_curvature


def minimality_report(
    chart: ImmersionChart,
    sample_count: int,
    tol: float = 1e-6,
    rng: np.random.Generator | None = None,
    fd_step: float = 1e-5,
) -> MinimalityReport:
    """Maximum of |H| over seeded interior samples; minimal iff it is below ``tol``."""
    if sample_count < 1:
        raise ContractViolation("sample_count must be at least 1")
    generator = rng if rng is not None else np.random.default_rng(0)
    points = chart.sample_points(generator, sample_count, fd_step)
    norms = np.array([np.linalg.norm(mean_curvature(chart, u)) for u in points])
    worst = int(np.argmax(norms))
    report = MinimalityReport(
        max_norm=float(norms[worst]),
        is_minimal=bool(norms[worst] < tol),
        sample_count=sample_count,
        worst_point=points[worst],
    )
    logger.debug("Minimality report", chart=chart.name, max_norm=report.max_norm, minimal=report.is_minimal)
    return report


def gauss_ricci(chart: ImmersionChart, u: ArrayLike) -> Array:
    """Ricci tensor in chart coordinates from the Gauss equation.

    ``Ric(X, Y) = <α(X, Y), H> - Σ_i <α(X, E_i), α(Y, E_i)>``.
    """
    shape = second_fundamental_form(chart, u)
    trace_k = np.trace(shape.alpha, axis1=1, axis2=2)
    frame_ricci = np.einsum("k,kij->ij", trace_k, shape.alpha) - np.einsum("kil,klj->ij", shape.alpha, shape.alpha)
    c_inv = inv(shape.frames.coefficients)
    return c_inv.T @ frame_ricci @ c_inv  # type: ignore[no-any-return]


def sectional_curvature(chart: ImmersionChart, u: ArrayLike, i: int = 0, j: int = 1) -> float:
    """Gauss-equation sectional curvature of the plane spanned by E_i and E_j."""
    a = second_fundamental_form(chart, u).alpha
    return float(np.sum(a[:, i, i] * a[:, j, j] - a[:, i, j] ** 2))
