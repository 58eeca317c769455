"""Helix submanifolds: the angle with a fixed direction d and everything built on it.

For a unit direction d the height function h_d(x) = <x, d> restricted to M
has gradient d^T, the tangent projection of d. M is a helix when the angle
θ = ∠(T_pM, d) is constant; T = d^T / |d^T| is then a unit tangent field
and ξ = d^⊥ / |d^⊥| a unit normal one, with d = cos θ T + sin θ ξ.
"""

from collections.abc import Callable, Sequence
from dataclasses import dataclass, field

import numpy as np
import structlog
from numpy.typing import ArrayLike

from helixlab.geometry.extrinsic import (
    frames,
    gauss_ricci,
    mean_curvature,
    minimality_report,
    second_fundamental_form,
)
from helixlab.immersions.catalog import (
    catenoid,
    complex_line,
    cylinder,
    flat,
    helicoid,
    round_sphere,
    tilted_plane,
)
from helixlab.immersions.chart import ImmersionChart
from helixlab.immersions.constructions import cylinder_over, graph_immersion
from helixlab.immersions.fields import constant, coordinate, cosine, linear, quadratic, radial
from helixlab.intrinsic.curvature import gradient, gradient_norm, hessian, laplacian, riemann
from helixlab.intrinsic.metric import pullback_metric
from helixlab.numerics.comparison import Comparison
from helixlab.numerics.jets import ScalarField, ScalarJet
from helixlab.numerics.linalg import Array, inv
from helixlab.utils.exceptions import ContractViolation, NonComplexSubmanifoldError, VerticalDirectionError

logger = structlog.get_logger(__name__)

VERTICAL_TOL = 1e-9
DEFAULT_STEP_COUNT = 50
BRACKET_STEP = 1e-3
BRACKET_SUBSTEPS = 4

ChartVelocity = Callable[[Array], Array]


def unit_direction(d: ArrayLike, n: int) -> Array:
    """Normalize d; the helix angle only depends on its direction."""
    vec = np.asarray_chkfinite(d, dtype=np.float64)
    if vec.shape != (n,):
        raise ContractViolation(f"direction must be a vector of R^{n}, got shape {vec.shape}")
    length = float(np.linalg.norm(vec))
    if length == 0.0:
        raise ContractViolation("direction must be nonzero")
    return vec / length


def height_function(chart: ImmersionChart, d: ArrayLike) -> ScalarField:
    """h_d = <x(u), d> as a scalar field on the chart."""
    unit = unit_direction(d, chart.n)

    def jet(u: Array) -> ScalarJet:
        j = chart.jet(u)
        return ScalarJet(float(j.value @ unit), j.jacobian.T @ unit, np.einsum("n,nab->ab", unit, j.hessians))

    return ScalarField(name=f"height({chart.name})", m=chart.m, jet_fn=jet)


def _split(chart: ImmersionChart, u: ArrayLike, d: Array) -> tuple[Array, Array]:
    fp = frames(chart, u)
    return fp.tangent_part(d), d - fp.tangent_part(d)


def helix_angle(chart: ImmersionChart, u: ArrayLike, d: ArrayLike) -> float:
    """θ(p) in [0, π/2], the angle between T_pM and d."""
    tangential, normal = _split(chart, u, unit_direction(d, chart.n))
    return float(np.arctan2(np.linalg.norm(normal), np.linalg.norm(tangential)))


def tangential_T(chart: ImmersionChart, u: ArrayLike, d: ArrayLike, tol: float = VERTICAL_TOL) -> Array:
    """Unit tangent field T = d^T / |d^T|.

    Raises:
        VerticalDirectionError: If d is normal to M at ``u``.
    """
    tangential, _ = _split(chart, u, unit_direction(d, chart.n))
    length = float(np.linalg.norm(tangential))
    if length <= tol:
        raise VerticalDirectionError(f"{chart.name}: direction is normal to the tangent space (|d^T| = {length:.2e})")
    return tangential / length  # type: ignore[no-any-return]


# Integral curves


def _tangent_velocity(chart: ImmersionChart, ambient: Callable[[Array, Array], Array]) -> ChartVelocity:
    """Chart velocity whose pushforward is the (tangent) ambient field ``ambient(u, jacobian)``."""

    def velocity(u: Array) -> Array:
        jac = chart.jet(u).jacobian
        return inv(jac.T @ jac) @ (jac.T @ ambient(u, jac))  # type: ignore[no-any-return]

    return velocity


def _T_velocity(chart: ImmersionChart, d: Array) -> ChartVelocity:
    def unit_tangent(u: Array, jac: Array) -> Array:
        tangential = jac @ (inv(jac.T @ jac) @ (jac.T @ d))
        length = float(np.linalg.norm(tangential))
        if length <= VERTICAL_TOL:
            raise VerticalDirectionError(f"{chart.name}: T is undefined at {u.tolist()}")
        return tangential / length  # type: ignore[no-any-return]

    return _tangent_velocity(chart, unit_tangent)


def _rk4_step(velocity: ChartVelocity, u: Array, h: float) -> Array:
    k1 = velocity(u)
    k2 = velocity(u + 0.5 * h * k1)
    k3 = velocity(u + 0.5 * h * k2)
    k4 = velocity(u + h * k3)
    return u + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)  # type: ignore[no-any-return]


def _flow(velocity: ChartVelocity, u0: Array, time: float, substeps: int) -> Array:
    u = u0.copy()
    for _ in range(substeps):
        u = _rk4_step(velocity, u, time / substeps)
    return u


@dataclass(frozen=True)
class CurveTrace:
    """An integrated curve: chart points, and whether it left the domain early."""

    chart_points: Array
    truncated: bool


def integrate_curve(
    chart: ImmersionChart,
    velocity: ChartVelocity,
    u0: ArrayLike,
    length: float,
    step_count: int = DEFAULT_STEP_COUNT,
) -> CurveTrace:
    """Fixed-step fourth-order Runge-Kutta integration of a chart velocity field.

    Integration stops, with ``truncated`` set, at the first step that would
    leave the domain shrunk by the sampling inset.
    """
    if step_count < 1:
        raise ContractViolation("step_count must be at least 1")
    inset = 0.5 * float(np.min(np.maximum(1e-5, 0.05 * chart.widths)))
    u = np.asarray(u0, dtype=np.float64)
    points = [u]
    h = length / step_count
    for _ in range(step_count):
        nxt = _rk4_step(velocity, u, h)
        if not chart.contains(nxt, inset):
            return CurveTrace(np.array(points), truncated=True)
        points.append(nxt)
        u = nxt
    return CurveTrace(np.array(points), truncated=False)


def _line_deviation(chart: ImmersionChart, trace: CurveTrace, direction: Array) -> float:
    ambient = np.array([chart.point(u) for u in trace.chart_points])
    offsets = ambient - ambient[0]
    perpendicular = offsets - np.outer(offsets @ direction, direction)
    return float(np.max(np.linalg.norm(perpendicular, axis=1), initial=0.0))


@dataclass(frozen=True)
class RuledResult:
    """Straightness of the T integral curves."""

    residual: float
    is_ruled: bool
    truncated: bool
    curve_count: int


def is_ruled(
    chart: ImmersionChart,
    d: ArrayLike,
    samples: int = 5,
    step_count: int = DEFAULT_STEP_COUNT,
    tol: float = 1e-8,
    rng: np.random.Generator | None = None,
    arc_length: float | None = None,
) -> RuledResult:
    """Integrate T from seeded start points and measure the largest distance
    of the ambient curves from the lines through their starts along T(start).

    Args:
        arc_length: Length of each curve; a quarter of the narrowest chart
            width by default.
    """
    unit = unit_direction(d, chart.n)
    generator = rng if rng is not None else np.random.default_rng(0)
    length = arc_length if arc_length is not None else 0.25 * float(np.min(chart.widths))
    velocity = _T_velocity(chart, unit)

    residual, truncated = 0.0, False
    for u0 in chart.sample_points(generator, samples):
        trace = integrate_curve(chart, velocity, u0, length, step_count)
        truncated = truncated or trace.truncated
        residual = max(residual, _line_deviation(chart, trace, tangential_T(chart, u0, unit)))
    if truncated:
        logger.debug("Integral curve left the chart domain", chart=chart.name)
    return RuledResult(residual=residual, is_ruled=residual < tol, truncated=truncated, curve_count=samples)


# Helix predicate


@dataclass(frozen=True)
class HelixReport:
    """Angle statistics of a chart against a direction, and derived flags.

    ``eikonal_residual`` is the spread of |∇_M h_d| = cos θ. ``gauss_residual``
    is only set for hypersurfaces and ``base_gradient_spread`` only for
    graph charts. T-dependent fields stay ``None`` when d is normal to M.
    """

    direction: list[float]
    angle_samples: list[float]
    angle_mean: float
    angle_spread: float
    eikonal_residual: float
    is_helix: bool
    is_cylinder: bool
    normal_direction: bool
    gauss_residual: float | None = None
    base_gradient_spread: float | None = None
    criteria_agree: bool | None = None
    ruled_residual: float | None = None
    is_ruled: bool | None = None
    notes: list[str] = field(default_factory=list)


def is_helix(
    chart: ImmersionChart,
    d: ArrayLike,
    samples: int = 100,
    tol: float = 1e-6,
    rng: np.random.Generator | None = None,
    check_ruled: bool = True,
) -> HelixReport:
    """Sample θ over the chart and classify it.

    For graph charts the eikonal criterion on the base (spread of |∇_B f|)
    is evaluated as well and must agree with the angle criterion.
    """
    unit = unit_direction(d, chart.n)
    generator = rng if rng is not None else np.random.default_rng(0)
    points = chart.sample_points(generator, samples)
    angles = np.array([helix_angle(chart, u, unit) for u in points])
    cosines = np.cos(angles)
    spread = float(np.max(angles) - np.min(angles))
    mean = float(np.mean(angles))
    helix = spread < tol
    normal_direction = helix and abs(mean - np.pi / 2) < tol
    notes: list[str] = []

    gauss = None
    if chart.n == chart.m + 1:
        gauss = gauss_image_check(chart, unit, points=points).spread

    base_spread, agree = None, None
    if chart.graph_of is not None:
        base_metric = pullback_metric(chart.graph_of.base)
        norms = np.array([gradient_norm(base_metric, chart.graph_of.field, u) for u in points])
        base_spread = float(np.max(norms) - np.min(norms))
        agree = (base_spread < tol) == helix
        if not agree:
            notes.append("eikonal and angle criteria disagree")

    ruled_residual, ruled = None, None
    if normal_direction:
        notes.append("d is normal to M: T is undefined, ruled check skipped")
    elif helix and check_ruled:
        result = is_ruled(chart, unit, rng=generator)
        ruled_residual, ruled = result.residual, result.is_ruled
        if result.truncated:
            notes.append("ruled check truncated at the chart boundary")

    report = HelixReport(
        direction=unit.tolist(),
        angle_samples=angles.tolist(),
        angle_mean=mean,
        angle_spread=spread,
        eikonal_residual=float(np.max(cosines) - np.min(cosines)),
        is_helix=helix,
        is_cylinder=helix and mean < tol,
        normal_direction=normal_direction,
        gauss_residual=gauss,
        base_gradient_spread=base_spread,
        criteria_agree=agree,
        ruled_residual=ruled_residual,
        is_ruled=ruled,
        notes=notes,
    )
    logger.debug("Helix report", chart=chart.name, helix=helix, angle=mean, spread=spread)
    return report


# Identities along a helix


def _projection_derivative(jac: Array, hessians: Array, g_inv: Array) -> Array:
    """∂_a P for the tangent projector P = J g^{-1} J^T, stacked along a."""
    out = []
    for a in range(jac.shape[1]):
        h_a = hessians[:, :, a]
        dg = h_a.T @ jac + jac.T @ h_a
        out.append(h_a @ g_inv @ jac.T + jac @ g_inv @ h_a.T - jac @ g_inv @ dg @ g_inv @ jac.T)
    return np.stack(out)


def structure_equation_residual(chart: ImmersionChart, d: ArrayLike, u: ArrayLike, tol: float = VERTICAL_TOL) -> float:
    """max_i |∇_{E_i} T - tan θ A_ξ E_i| at ``u``.

    ∇T is the tangent projection of the ambient derivative of T, computed
    exactly from the second jet. Returns 0 when d is tangent (θ = 0, T constant).

    Raises:
        VerticalDirectionError: If d is normal to M at ``u``.
    """
    unit = unit_direction(d, chart.n)
    shape = second_fundamental_form(chart, u)
    fp = shape.frames
    projector = fp.tangent @ fp.tangent.T
    tangential = projector @ unit
    c = float(np.linalg.norm(tangential))
    s = float(np.linalg.norm(unit - tangential))
    if s <= tol:
        return 0.0
    if c <= tol:
        raise VerticalDirectionError(f"{chart.name}: direction is normal at {np.asarray(u).tolist()}")
    xi = (unit - tangential) / s

    dv = _projection_derivative(fp.jet.jacobian, fp.jet.hessians, fp.metric_inv) @ unit
    d_t = dv / c - np.outer(dv @ tangential, tangential) / c**3
    lhs = projector @ (d_t.T @ fp.coefficients)
    rhs = (s / c) * fp.tangent @ shape.shape_operator(xi)
    return float(np.max(np.linalg.norm(lhs - rhs, axis=0)))


@dataclass(frozen=True)
class LaplacianHeight:
    """Δ_M h_d against <H, d> and sin θ <H, ξ>."""

    lhs: float
    rhs_mean_curvature: float
    rhs_angle: float


def laplacian_height_check(chart: ImmersionChart, d: ArrayLike, u: ArrayLike, fd_step: float = 1e-5) -> LaplacianHeight:
    """Intrinsic Laplacian of the height function on the induced metric.

    The angle form uses θ from ``helix_angle`` and the unit normal ξ from the
    normal frame, oriented towards d on hypersurfaces.
    """
    unit = unit_direction(d, chart.n)
    lhs = laplacian(pullback_metric(chart, fd_step), height_function(chart, unit), u)
    fp = frames(chart, u)
    h = mean_curvature(chart, u)
    sin_theta = float(np.sin(helix_angle(chart, u, unit)))
    if fp.normal.shape[1] == 1:
        xi = fp.normal[:, 0] if float(fp.normal[:, 0] @ unit) >= 0.0 else -fp.normal[:, 0]
    else:
        coords = fp.normal.T @ unit
        xi = fp.normal @ (coords / max(float(np.linalg.norm(coords)), VERTICAL_TOL))
    rhs_angle = sin_theta * float(h @ xi) if sin_theta > VERTICAL_TOL else 0.0
    return LaplacianHeight(lhs=lhs, rhs_mean_curvature=float(h @ unit), rhs_angle=rhs_angle)


# Complex submanifolds


def standard_complex_structure(n: int) -> Array:
    """J(x1, y1, x2, y2, ...) = (-y1, x1, -y2, x2, ...)."""
    if n % 2:
        raise ContractViolation(f"complex structure needs an even dimension, got {n}")
    return np.kron(np.eye(n // 2), np.array([[0.0, -1.0], [1.0, 0.0]]))  # type: ignore[no-any-return]


@dataclass(frozen=True)
class ComplexHelixResult:
    jt_geodesic_residual: float
    bracket_residual: float
    truncated: bool


def complex_helix_checks(
    chart: ImmersionChart,
    d: ArrayLike,
    u: ArrayLike,
    tol: float = 1e-8,
    step_count: int = DEFAULT_STEP_COUNT,
) -> ComplexHelixResult:
    """Straightness of the JT integral curve through ``u`` and the bracket [T, JT].

    The bracket is the second-order commutator of the two flows over time
    ``BRACKET_STEP``, mapped to R^n by the jacobian.

    Raises:
        NonComplexSubmanifoldError: If J does not preserve the tangent space.
    """
    unit = unit_direction(d, chart.n)
    j_std = standard_complex_structure(chart.n)
    fp = frames(chart, u)
    leak = float(np.max(np.linalg.norm(fp.normal.T @ (j_std @ fp.tangent), axis=0), initial=0.0))
    if leak > tol:
        raise NonComplexSubmanifoldError(f"{chart.name}: J moves the tangent space off itself by {leak:.2e}")

    t_velocity = _T_velocity(chart, unit)

    def jt(w: Array, jac: Array) -> Array:
        tangential = jac @ (inv(jac.T @ jac) @ (jac.T @ unit))
        return j_std @ tangential / float(np.linalg.norm(tangential))  # type: ignore[no-any-return]

    jt_velocity = _tangent_velocity(chart, jt)

    start = np.asarray(u, dtype=np.float64)
    length = 0.25 * float(np.min(chart.widths))
    trace = integrate_curve(chart, jt_velocity, start, length, step_count)
    jt_start = j_std @ tangential_T(chart, start, unit)
    straightness = _line_deviation(chart, trace, jt_start)

    h = BRACKET_STEP
    forward = _flow(jt_velocity, _flow(t_velocity, start, h, BRACKET_SUBSTEPS), h, BRACKET_SUBSTEPS)
    backward = _flow(t_velocity, _flow(jt_velocity, start, h, BRACKET_SUBSTEPS), h, BRACKET_SUBSTEPS)
    bracket = fp.jet.jacobian @ ((forward - backward) / h**2)

    return ComplexHelixResult(
        jt_geodesic_residual=straightness,
        bracket_residual=float(np.linalg.norm(bracket)),
        truncated=trace.truncated,
    )


# Hypersurfaces


@dataclass(frozen=True)
class GaussImageResult:
    """Spread and mean of |<N, d>| over the sampled points."""

    spread: float
    mean: float


def gauss_image_check(
    chart: ImmersionChart,
    d: ArrayLike,
    samples: int = 100,
    rng: np.random.Generator | None = None,
    points: Array | None = None,
) -> GaussImageResult:
    """Angle between the unit normal and d over the chart (hypersurfaces only)."""
    if chart.n != chart.m + 1:
        raise ContractViolation(f"{chart.name}: Gauss image check needs a hypersurface")
    unit = unit_direction(d, chart.n)
    if points is None:
        generator = rng if rng is not None else np.random.default_rng(0)
        points = chart.sample_points(generator, samples)
    values = np.array([abs(float(frames(chart, u).normal[:, 0] @ unit)) for u in points])
    return GaussImageResult(spread=float(np.max(values) - np.min(values)), mean=float(np.mean(values)))


@dataclass(frozen=True)
class RicciTResult:
    """Ric_M(T, T) intrinsically and from the Gauss equation, and |A T|.

    ``applicable`` is false when T is not in the relative nullity, i.e. the
    chart is not a helix hypersurface of the kind the identity is about.
    """

    ricci_tt: float
    gauss_ricci_tt: float
    nullity_residual: float
    applicable: bool


def ricci_T_check(
    chart: ImmersionChart,
    d: ArrayLike,
    u: ArrayLike,
    nullity_tol: float = 1e-6,
    fd_step: float = 1e-5,
) -> RicciTResult:
    """Evaluate Ric_M(T, T) on the induced metric and |A_N T| at ``u``."""
    if chart.n != chart.m + 1:
        raise ContractViolation(f"{chart.name}: Ricci check needs a hypersurface")
    unit = unit_direction(d, chart.n)
    t_vec = tangential_T(chart, u, unit)
    shape = second_fundamental_form(chart, u)
    fp = shape.frames
    t_chart = fp.chart_velocity(t_vec)
    ricci = riemann(pullback_metric(chart, fd_step), u).ricci
    nullity = float(np.linalg.norm(shape.alpha[0] @ (fp.tangent.T @ t_vec)))
    return RicciTResult(
        ricci_tt=float(t_chart @ ricci @ t_chart),
        gauss_ricci_tt=float(t_chart @ gauss_ricci(chart, u) @ t_chart),
        nullity_residual=nullity,
        applicable=nullity < nullity_tol,
    )


# Projection method


def projection_formulae(chart: ImmersionChart, u: ArrayLike) -> list[Comparison]:
    """Graph-chart identities at ``u`` for a chart built by the projection method.

    Records Δ_B f, the mean-curvature identity on B, tangency of the graph
    normal, trace(A_N) against its closed form and φ_*(Ẽ_1) = T.
    """
    if chart.graph_of is None:
        raise ContractViolation(f"{chart.name} is not a graph chart")
    base, f = chart.graph_of.base, chart.graph_of.field
    point = np.asarray(u, dtype=np.float64)
    metric = pullback_metric(base)
    grad = gradient(metric, f, point)
    w = float(grad @ metric.g(point) @ grad)
    scale = 1.0 + w
    base_jet = base.jet(point)
    grad_ambient = base_jet.jacobian @ grad

    base_frames = frames(base, point)
    alpha_grad = base_frames.normal_part(np.einsum("nab,a,b->n", base_jet.hessians, grad, grad))
    delta_f = laplacian(metric, f, point)
    hess_grad = float(grad @ hessian(metric, f, point) @ grad)

    normal = np.append(grad_ambient, -1.0) / np.sqrt(scale)
    normal_residual = float(np.max(np.abs(normal @ chart.jet(point).jacobian)))

    records = [
        Comparison.scalar("base_laplacian", "projection-formulae", delta_f, 0.0),
        Comparison.tensor(
            "base_mean_curvature", "projection-formulae", mean_curvature(base, point), alpha_grad / scale
        ),
        Comparison.scalar("graph_normal", "projection-formulae", normal_residual, 0.0),
        Comparison.scalar(
            "normal_trace",
            "projection-formulae",
            float(mean_curvature(chart, point) @ normal),
            -(delta_f - hess_grad / scale) / np.sqrt(scale),
        ),
    ]
    if w > VERTICAL_TOL:
        d = np.zeros(chart.n)
        d[-1] = 1.0
        pushed = chart.jet(point).jacobian @ grad / (np.sqrt(w) * np.sqrt(scale))
        records.append(Comparison.tensor("pushforward_T", "projection-formulae", pushed, tangential_T(chart, point, d)))
        records.append(
            Comparison.scalar(
                "angle_identity",
                "eikonal-helix",
                np.cos(helix_angle(chart, point, d)),
                np.sqrt(w) / np.sqrt(scale),
            )
        )
    return records


@dataclass(frozen=True)
class FormulaeVerdict:
    """Minimality of a graph against the base conditions on f."""

    chart: str
    graph_minimal: bool
    base_conditions: bool
    max_laplacian: float
    max_mean_residual: float

    @property
    def agree(self) -> bool:
        return self.graph_minimal == self.base_conditions


def formulae_verdict(
    chart: ImmersionChart,
    samples: int = 20,
    tol: float = 1e-5,
    rng: np.random.Generator | None = None,
) -> FormulaeVerdict:
    """Graph minimal ⟺ Δ_B f = 0 and H_B = α_B(∇f, ∇f) / (1 + |∇f|²), on samples."""
    generator = rng if rng is not None else np.random.default_rng(0)
    minimal = minimality_report(chart, samples, tol, generator).is_minimal
    max_lap, max_mean = 0.0, 0.0
    for u in chart.sample_points(generator, samples):
        by_name = {r.name: r for r in projection_formulae(chart, u)}
        max_lap = max(max_lap, by_name["base_laplacian"].residual)
        max_mean = max(max_mean, by_name["base_mean_curvature"].residual)
    return FormulaeVerdict(
        chart=chart.name,
        graph_minimal=minimal,
        base_conditions=max_lap < tol and max_mean < tol,
        max_laplacian=max_lap,
        max_mean_residual=max_mean,
    )


def graph_formula_corpus() -> list[tuple[ImmersionChart, bool]]:
    """Graph charts over flat and curved bases with the expected minimality."""
    flat2, flat3 = flat(2), flat(3)
    ring = cylinder("circle")
    sphere = round_sphere(1.0)
    return [
        (graph_immersion(flat2, linear([0.6, 0.8])), True),
        (graph_immersion(flat2, coordinate(2, 0)), True),
        (graph_immersion(flat2, radial(2, 1.0)), False),
        (graph_immersion(flat2, radial(2, 2.0)), False),
        (graph_immersion(flat2, quadratic([1.0, 0.0])), False),
        (graph_immersion(flat2, quadratic([1.0, 1.0])), False),
        (graph_immersion(flat3, linear([1.0, 2.0, 2.0])), True),
        (graph_immersion(ring, coordinate(2, 1)), False),
        (graph_immersion(ring, coordinate(2, 0)), False),
        (graph_immersion(sphere, cosine(2, 0, 1.0)), False),
        (graph_immersion(catenoid(), constant(2, 0.5)), True),
        (graph_immersion(helicoid(), constant(2, 0.5)), True),
        (graph_immersion(cylinder_over(catenoid()), coordinate(3, 2)), True),
    ]


# Main theorem harness


def affine_rank(
    chart: ImmersionChart,
    samples: int = 500,
    cutoff: float = 1e-8,
    rng: np.random.Generator | None = None,
) -> int:
    """Dimension of the affine span of sampled ambient points."""
    generator = rng if rng is not None else np.random.default_rng(0)
    points = np.array([chart.point(u) for u in chart.sample_points(generator, samples)])
    singular = np.linalg.svd(points - points.mean(axis=0), compute_uv=False)
    if singular.size == 0 or singular[0] == 0.0:
        return 0
    return int(np.sum(singular > cutoff * singular[0]))


@dataclass(frozen=True)
class HarnessEntry:
    """Outcome for one chart of the ruled-minimal-helix corpus.

    ``verdict`` is one of ``not-applicable``, ``non-ruled-candidate``,
    ``non-full``, ``cylinder`` or ``counterexample``.
    """

    chart: str
    angle: float
    is_minimal: bool
    is_helix: bool
    is_ruled: bool | None
    is_cylinder: bool
    affine_rank: int
    n: int
    verdict: str


def main_theorem_corpus(rng: np.random.Generator, plane_count: int = 3) -> list[tuple[ImmersionChart, Array]]:
    """Seeded ruled minimal helices: tilted planes, cylinders over minimal
    surfaces and a complex line against a generic direction.

    Tilt angles, surface parameters, the complex-line coefficient and its
    direction are drawn from ``rng``.
    """
    e3 = np.array([0.0, 0.0, 1.0])
    e4 = np.array([0.0, 0.0, 0.0, 1.0])
    thetas = rng.uniform(0.2, 1.3, size=plane_count)
    catenoid_c, helicoid_c = rng.uniform(0.5, 2.0, size=2)
    a_re, a_im = rng.uniform(-1.0, 1.0, size=2)
    generic = rng.normal(size=4)
    return [
        *((tilted_plane(float(theta)), e3) for theta in thetas),
        (cylinder_over(catenoid(float(catenoid_c))), e4),
        (cylinder_over(helicoid(float(helicoid_c))), e4),
        (complex_line(float(a_re), float(a_im)), generic / np.linalg.norm(generic)),
    ]


def main_theorem_harness(
    corpus: Sequence[tuple[ImmersionChart, Array]] | None = None,
    samples: int = 50,
    tol: float = 1e-6,
    rank_samples: int = 500,
    rng: np.random.Generator | None = None,
) -> list[HarnessEntry]:
    """Classify each minimal ruled helix: with θ > tol it must be non-full,
    with θ ≈ 0 a cylinder. Non-ruled minimal helices are listed as candidates."""
    generator = rng if rng is not None else np.random.default_rng(0)
    entries = []
    for chart, d in corpus if corpus is not None else main_theorem_corpus(generator):
        minimal = minimality_report(chart, samples, tol, generator).is_minimal
        report = is_helix(chart, d, samples, tol, generator)
        rank = affine_rank(chart, rank_samples, rng=generator)
        if not (minimal and report.is_helix):
            verdict = "not-applicable"
        elif report.is_ruled is False:
            verdict = "non-ruled-candidate"
        elif report.angle_mean > tol:
            verdict = "non-full" if rank < chart.n else "counterexample"
        else:
            verdict = "cylinder" if report.is_cylinder else "counterexample"
        entries.append(
            HarnessEntry(
                chart=chart.name,
                angle=report.angle_mean,
                is_minimal=minimal,
                is_helix=report.is_helix,
                is_ruled=report.is_ruled,
                is_cylinder=report.is_cylinder,
                affine_rank=rank,
                n=chart.n,
                verdict=verdict,
            )
        )
        if verdict == "counterexample":
            logger.error("Main theorem counterexample", chart=chart.name, angle=report.angle_mean, rank=rank)
    return entries

