"""Parallel (offset) submanifolds p ↦ p + t·η(p) of a constant-length normal field.

Formulas are stated for the unit field η̂ = η / |η| and the rescaled
parameter s = t·|η|. In an orthonormal frame Ẽ diagonalizing A_η̂ with
eigenvalues λ_i, and with N_ij = <∇^⊥_{Ẽ_i} η̂, ∇^⊥_{Ẽ_j} η̂>:

    X_i = (1 - sλ_i) Ẽ_i + s ∇^⊥_{Ẽ_i} η̂
    G   = (𝟏 - sD)² + s² N
    Tr(A^s_η̂) = φ(s) for the triple (D, N)

Each formula has a brute-force counterpart on the offset chart itself.
"""

from collections.abc import Callable, Sequence
from dataclasses import dataclass, field

import numpy as np
import structlog
from numpy.typing import ArrayLike

from helixlab.geometry.extrinsic import (
    FramePack,
    frames,
    mean_curvature,
    minimality_report,
    second_fundamental_form,
)
from helixlab.geometry.trace_lemma import LemmaDecision, SymmetricTriple, lemma_la_decision, trace_rational
from helixlab.immersions.catalog import catenoid, circle, complex_line, plane, round_sphere, tilted_plane
from helixlab.immersions.chart import ImmersionChart
from helixlab.immersions.fields import VectorField, constant_vector
from helixlab.numerics.comparison import Comparison
from helixlab.numerics.jets import Jet2
from helixlab.numerics.linalg import Array, sym_eig
from helixlab.utils.exceptions import (
    ContractViolation,
    ImmersionDegeneratesAtT,
    InsufficientGridError,
    PoleError,
    SingularOffsetMetricError,
)

logger = structlog.get_logger(__name__)

FIELD_TOL = 1e-9
DEGENERACY_TOL = 1e-10
VALIDATION_SAMPLES = 20
SAFETY_FACTOR = 0.9
DEFAULT_T_BOUND = 1.0


@dataclass(frozen=True, eq=False)
class NormalField:
    """A normal vector field of constant length along a chart."""

    base: ImmersionChart
    eta: VectorField
    length: float = 1.0
    name: str = ""

    def __post_init__(self) -> None:
        if self.eta.m != self.base.m or self.eta.n != self.base.n:
            raise ContractViolation(f"field {self.eta.name} does not live along {self.base.name}")
        if not self.length > 0:
            raise ContractViolation("normal field length must be positive")
        if not self.name:
            object.__setattr__(self, "name", f"{self.eta.name} on {self.base.name}")

    def unit(self, u: ArrayLike) -> Array:
        return self.eta(u) / self.length  # type: ignore[no-any-return]

    def validate(self, rng: np.random.Generator | None = None, samples: int = VALIDATION_SAMPLES) -> None:
        """Check normality and constant length at the center and seeded samples.

        Raises:
            ContractViolation: On the first failing point.
        """
        generator = rng if rng is not None else np.random.default_rng(0)
        for u in np.vstack([self.base.center, self.base.sample_points(generator, samples)]):
            value = self.eta(u)
            tangential = float(np.max(np.abs(frames(self.base, u).tangent.T @ value)))
            if tangential > FIELD_TOL:
                raise ContractViolation(f"{self.name} is not normal at {u.tolist()} (<η, E> = {tangential:.2e})")
            if abs(float(np.linalg.norm(value)) - self.length) > FIELD_TOL:
                raise ContractViolation(f"{self.name} does not have constant length {self.length:g}")


def normal_connection(normal_field: NormalField, u: ArrayLike, pack: FramePack | None = None) -> Array:
    """``out[j, i] = <∇^⊥_{E_i} η̂, ξ_j>`` in the base frames at ``u``."""
    fp = pack if pack is not None else frames(normal_field.base, u)
    ambient = normal_field.eta.jet(u).jacobian @ fp.coefficients / normal_field.length
    return fp.normal.T @ ambient  # type: ignore[no-any-return]


@dataclass(frozen=True)
class OffsetData:
    """Eigen-data of A_η̂ and the matrices D, N at one base point.

    ``eigenframe`` holds Ẽ_i as columns and ``rotation`` the orthogonal V
    with Ẽ = E V. ``connection[j, i] = <∇^⊥_{Ẽ_i} η̂, ξ_j>``.
    """

    frames: FramePack
    lambdas: Array
    rotation: Array
    eigenframe: Array
    connection: Array
    Dm: Array
    Nm: Array
    length: float

    def scaled(self, t: float) -> float:
        """s = t·|η|."""
        return t * self.length

    def triple(self) -> SymmetricTriple:
        return SymmetricTriple(self.Dm, self.Nm)

    def degeneracy(self, t: float) -> float:
        """det(𝟏 - sA_η̂)."""
        return float(np.prod(1.0 - self.scaled(t) * self.lambdas))


def offset_data(normal_field: NormalField, u: ArrayLike) -> OffsetData:
    """Diagonalize A_η̂ = Σ_k <η̂, ξ_k> α_k and express ∇^⊥η̂ in the eigenframe."""
    shape = second_fundamental_form(normal_field.base, u)
    fp = shape.frames
    a_eta = shape.shape_operator(normal_field.unit(u))
    lambdas, rotation = sym_eig(0.5 * (a_eta + a_eta.T))
    connection = normal_connection(normal_field, u, fp) @ rotation
    return OffsetData(
        frames=fp,
        lambdas=lambdas,
        rotation=rotation,
        eigenframe=fp.tangent @ rotation,
        connection=connection,
        Dm=np.diag(lambdas),
        Nm=connection.T @ connection,
        length=normal_field.length,
    )


def _require_regular(data: OffsetData, t: float, where: str) -> None:
    value = data.degeneracy(t)
    if value < DEGENERACY_TOL:
        raise ImmersionDegeneratesAtT(
            f"offset at t={t:g} degenerates {where} (det(𝟏 - tA) = {value:.2e})", t=t, det=value
        )


def offset_immersion(
    normal_field: NormalField,
    t: float,
    rng: np.random.Generator | None = None,
    samples: int = VALIDATION_SAMPLES,
) -> ImmersionChart:
    """Chart u ↦ base(u) + t·η(u), jets by linearity.

    Raises:
        ImmersionDegeneratesAtT: If det(𝟏 - sA_η̂) < 1e-10 at the center or a sample.
    """
    base = normal_field.base
    if t != 0.0:
        generator = rng if rng is not None else np.random.default_rng(0)
        for u in np.vstack([base.center, base.sample_points(generator, samples)]):
            _require_regular(offset_data(normal_field, u), t, f"at {np.round(u, 6).tolist()}")

    def jet(u: Array) -> Jet2:
        return base.jet(u).combine(normal_field.eta.jet(u), t)

    return ImmersionChart(
        name=f"offset({normal_field.name}, t={t:g})",
        m=base.m,
        n=base.n,
        domain=base.domain,
        jet_fn=jet,
        params={"field": normal_field.name, "t": t, "s": t * normal_field.length},
    )


@dataclass(frozen=True)
class OffsetFrames:
    """Tangent vectors X_i of the offset and the transported normals ξ̃_j (columns)."""

    tangent: Array
    normal: Array


def offset_frames(normal_field: NormalField, u: ArrayLike, t: float) -> OffsetFrames:
    """X_i and ξ̃_j = ξ_j - Σ_k s<∇^⊥_k η̂, ξ_j> / (1 - sλ_k) Ẽ_k."""
    data = offset_data(normal_field, u)
    _require_regular(data, t, "at the frame point")
    s = data.scaled(t)
    normal = data.frames.normal
    tangent = data.eigenframe * (1.0 - s * data.lambdas) + s * normal @ data.connection
    weights = s * data.connection / (1.0 - s * data.lambdas)
    return OffsetFrames(tangent=tangent, normal=normal - data.eigenframe @ weights.T)


def offset_metric(normal_field: NormalField, u: ArrayLike, t: float) -> Array:
    """G = (𝟏 - sD)² + s²N in the X frame."""
    data = offset_data(normal_field, u)
    s = data.scaled(t)
    return np.diag((1.0 - s * data.lambdas) ** 2) + s * s * data.Nm  # type: ignore[no-any-return]


def offset_metric_oracle(normal_field: NormalField, u: ArrayLike, t: float) -> Array:
    """First fundamental form of the offset chart, pulled back to the Ẽ directions."""
    data = offset_data(normal_field, u)
    chart = offset_immersion(normal_field, t, samples=1)
    coefficients = data.frames.coefficients @ data.rotation
    return coefficients.T @ chart.metric(u) @ coefficients  # type: ignore[no-any-return]


def offset_shape_trace(normal_field: NormalField, u: ArrayLike, t: float) -> float:
    """Tr(A^s_η̂) on the offset from the trace formula.

    Raises:
        SingularOffsetMetricError: If 𝟏 - 2sD + s²H is singular.
    """
    data = offset_data(normal_field, u)
    try:
        return trace_rational(data.triple(), data.scaled(t))
    except PoleError as e:
        raise SingularOffsetMetricError(f"offset metric is singular at t={t:g}") from e


def offset_shape_trace_oracle(normal_field: NormalField, u: ArrayLike, t: float) -> float:
    """<H_offset, η̂> from the offset chart's own second fundamental form."""
    chart = offset_immersion(normal_field, t, samples=1)
    return float(mean_curvature(chart, u) @ normal_field.unit(u))


def offset_formula_records(normal_field: NormalField, u: ArrayLike, t: float) -> list[Comparison]:
    """Formula against brute force for the metric, frames and trace at one (u, t)."""
    data = offset_data(normal_field, u)
    x = offset_frames(normal_field, u, t)
    chart = offset_immersion(normal_field, t, samples=1)
    offset_pack = frames(chart, u)
    pushed = chart.jet(u).jacobian @ data.frames.coefficients @ data.rotation
    note = f"s={data.scaled(t):g}"
    zeros = np.zeros((chart.n - chart.m, chart.m))
    metric = offset_metric(normal_field, u, t)
    oracle = offset_metric_oracle(normal_field, u, t)
    trace = offset_shape_trace(normal_field, u, t)
    trace_oracle = offset_shape_trace_oracle(normal_field, u, t)
    smallest = float(sym_eig(data.Nm)[0][-1])
    return [
        Comparison.tensor("offset_metric", "offset-metric", metric, oracle, note),
        Comparison.tensor("offset_tangents", "offset-frames", x.tangent, pushed, note),
        Comparison.tensor("offset_tangent_normality", "offset-frames", offset_pack.normal.T @ x.tangent, zeros, note),
        Comparison.tensor("offset_normal_orthogonality", "offset-frames", x.normal.T @ x.tangent, zeros, note),
        Comparison.scalar("offset_trace", "trace-of-shape", trace, trace_oracle, note),
        Comparison.scalar("normal_psd", "offset-normal-psd", min(0.0, smallest), 0.0, note),
    ]


def valid_offset_range(
    normal_field: NormalField,
    samples: int = VALIDATION_SAMPLES,
    rng: np.random.Generator | None = None,
    safety: float = SAFETY_FACTOR,
    bound: float = DEFAULT_T_BOUND,
) -> tuple[float, float]:
    """Interval of t around 0 where det(𝟏 - tA_η) > 0 at every sample, shrunk by ``safety``.

    Without a focal point on one side the interval is capped at ``bound``.
    """
    generator = rng if rng is not None else np.random.default_rng(0)
    base = normal_field.base
    lambdas = np.concatenate(
        [offset_data(normal_field, u).lambdas for u in np.vstack([base.center, base.sample_points(generator, samples)])]
    )
    top, bottom = float(np.max(lambdas)), float(np.min(lambdas))
    t_hi = safety / (top * normal_field.length) if top > 0 else np.inf
    t_lo = safety / (bottom * normal_field.length) if bottom < 0 else -np.inf
    return max(-bound, t_lo), min(bound, t_hi)


def default_t_grid(normal_field: NormalField, count: int = 7, rng: np.random.Generator | None = None) -> Array:
    lo, hi = valid_offset_range(normal_field, rng=rng)
    return np.linspace(lo, hi, count)


@dataclass(frozen=True)
class OffsetCertificate:
    """Minimality of all offsets against constancy of η.

    ``implication_holds`` is offsets_minimal ⇒ eta_constant. ``bridge``
    holds the trace-identity decision at each sampled base point whose
    offset traces were evaluated on the t grid.
    """

    offsets_minimal: bool
    eta_constant: bool
    max_mean_curvature: float
    max_normal_connection: float
    max_shape_operator: float
    t_values: list[float]
    bridge: list[LemmaDecision] = field(default_factory=list)

    @property
    def implication_holds(self) -> bool:
        return self.eta_constant or not self.offsets_minimal

    @property
    def bridge_consistent(self) -> bool:
        return all(decision.consistent for decision in self.bridge)


def minimal_offsets_certificate(
    normal_field: NormalField,
    t_grid: Sequence[float] | Array | None = None,
    samples: int = 20,
    tol: float = 1e-6,
    rng: np.random.Generator | None = None,
) -> OffsetCertificate:
    """Test every offset on the grid for minimality and η for constancy.

    Raises:
        ContractViolation: If the grid has fewer than five values.
    """
    generator = rng if rng is not None else np.random.default_rng(0)
    grid = default_t_grid(normal_field, rng=generator) if t_grid is None else np.asarray(t_grid, dtype=np.float64)
    if grid.shape[0] < 5:
        raise ContractViolation("the offset grid needs at least five t values")

    max_h = 0.0
    for t in grid:
        report = minimality_report(offset_immersion(normal_field, float(t), generator), samples, tol, generator)
        max_h = max(max_h, report.max_norm)

    max_conn, max_shape = 0.0, 0.0
    bridge = []
    scaled = grid * normal_field.length
    for u in normal_field.base.sample_points(generator, samples):
        data = offset_data(normal_field, u)
        max_conn = max(max_conn, float(np.linalg.norm(data.connection)))
        max_shape = max(max_shape, float(np.max(np.abs(data.lambdas))))
        try:
            bridge.append(lemma_la_decision(data.triple(), scaled[scaled != 0.0], tol))
        except InsufficientGridError:
            continue

    certificate = OffsetCertificate(
        offsets_minimal=max_h < tol,
        eta_constant=max(max_conn, max_shape) < tol,
        max_mean_curvature=max_h,
        max_normal_connection=max_conn,
        max_shape_operator=max_shape,
        t_values=grid.tolist(),
        bridge=bridge,
    )
    logger.debug(
        "Offsets certificate",
        field=normal_field.name,
        minimal=certificate.offsets_minimal,
        constant=certificate.eta_constant,
    )
    return certificate


@dataclass(frozen=True)
class FoliationVerdict:
    """``verdict`` is ``totally-geodesic``, ``not-a-minimal-foliation`` or ``violation``."""

    verdict: str
    leaves_minimal: bool
    max_second_fundamental_form: float
    max_affine_residual: float


def foliation_flatness_check(
    normal_field: NormalField,
    t_grid: Sequence[float] | Array,
    samples: int = 20,
    tol: float = 1e-6,
    affine_tol: float = 1e-8,
    rng: np.random.Generator | None = None,
) -> FoliationVerdict:
    """Leaves p + tη: if all are minimal, each must be totally geodesic and lie
    in the affine subspace through its center point orthogonal to its normals."""
    generator = rng if rng is not None else np.random.default_rng(0)
    leaves = [offset_immersion(normal_field, float(t), generator) for t in t_grid]
    minimal = all(minimality_report(leaf, samples, tol, generator).is_minimal for leaf in leaves)
    if not minimal:
        return FoliationVerdict("not-a-minimal-foliation", False, float("nan"), float("nan"))

    max_alpha, max_affine = 0.0, 0.0
    for leaf in leaves:
        anchor = frames(leaf, leaf.center)
        for u in leaf.sample_points(generator, samples):
            max_alpha = max(max_alpha, float(np.linalg.norm(second_fundamental_form(leaf, u).alpha)))
            offset = leaf.point(u) - anchor.point
            max_affine = max(max_affine, float(np.max(np.abs(anchor.normal.T @ offset), initial=0.0)))
    flat = max_alpha < tol and max_affine < affine_tol
    return FoliationVerdict("totally-geodesic" if flat else "violation", True, max_alpha, max_affine)


# Catalog of normal fields


def _scaled_jet(jet: Jet2, factor: float) -> Jet2:
    return Jet2(factor * jet.value, factor * jet.jacobian, factor * jet.hessians)


def sphere_normal(r: float = 1.0, outward: bool = True, length: float = 1.0) -> NormalField:
    """±p/r on round_sphere(r), scaled to ``length``."""
    base = round_sphere(r)
    factor = (1.0 if outward else -1.0) * length / r
    name = "sphere_outward" if outward else "sphere_inward"
    eta = VectorField(name=name, m=2, n=3, jet_fn=lambda u: _scaled_jet(base.jet(u), factor))
    return NormalField(base=base, eta=eta, length=length)


def circle_vertical(r: float = 1.0) -> NormalField:
    """Constant e3 along a planar circle."""
    return NormalField(base=circle(r), eta=constant_vector([0.0, 0.0, 1.0], 1, name="vertical"))


def circle_inward(r: float = 1.0) -> NormalField:
    """-p/r along a planar circle; focal at t = r."""
    base = circle(r)
    eta = VectorField(name="inward", m=1, n=3, jet_fn=lambda u: _scaled_jet(base.jet(u), -1.0 / r))
    return NormalField(base=base, eta=eta)


def circle_rotating(r: float = 1.0, omega: float = 1.0, length: float = 1.0) -> NormalField:
    """cos(ωs) e3 + sin(ωs) ρ(s) along circle(r), ρ the outward radial unit vector."""

    def jet(u: Array) -> Jet2:
        s = float(u[0])
        cw, sw, cs, ss = np.cos(omega * s), np.sin(omega * s), np.cos(s), np.sin(s)
        value = np.array([sw * cs, sw * ss, cw])
        first = np.array([omega * cw * cs - sw * ss, omega * cw * ss + sw * cs, -omega * sw])
        second = np.array(
            [
                -(omega**2) * sw * cs - 2.0 * omega * cw * ss - sw * cs,
                -(omega**2) * sw * ss + 2.0 * omega * cw * cs - sw * ss,
                -(omega**2) * cw,
            ]
        )
        return Jet2(length * value, length * first[:, None], length * second[:, None, None])

    eta = VectorField(name=f"rotating(omega={omega:g})", m=1, n=3, jet_fn=jet)
    return NormalField(base=circle(r), eta=eta, length=length)


def strip_rotating(omega: float = 1.0, length: float = 1.0) -> NormalField:
    """cos(ωu) e3 + sin(ωu) e4 along the coordinate plane of R^4."""

    def jet(u: Array) -> Jet2:
        c, s = np.cos(omega * u[0]), np.sin(omega * u[0])
        value = np.array([0.0, 0.0, c, s])
        jac = np.zeros((4, 2))
        jac[2:, 0] = omega * np.array([-s, c])
        hess = np.zeros((4, 2, 2))
        hess[2:, 0, 0] = -(omega**2) * np.array([c, s])
        return Jet2(length * value, length * jac, length * hess)

    eta = VectorField(name=f"strip_rotating(omega={omega:g})", m=2, n=4, jet_fn=jet)
    return NormalField(base=plane(4), eta=eta, length=length)


def catenoid_gauss(c: float = 1.0) -> NormalField:
    """Unit normal (cos u, sin u, -sinh(v/c)) / cosh(v/c) of the catenoid."""

    def jet(u: Array) -> Jet2:
        cp, sp = np.cos(u[0]), np.sin(u[0])
        q = 1.0 / np.cosh(u[1] / c)
        th = np.tanh(u[1] / c)
        dq = -th * q / c
        ddq = q * (th * th - q * q) / (c * c)
        value = np.array([cp * q, sp * q, -th])
        jac = np.array([[-sp * q, cp * dq], [cp * q, sp * dq], [0.0, -q * q / c]])
        hess = np.zeros((3, 2, 2))
        hess[:, 0, 0] = [-cp * q, -sp * q, 0.0]
        hess[:, 0, 1] = hess[:, 1, 0] = [-sp * dq, cp * dq, 0.0]
        hess[:, 1, 1] = [cp * ddq, sp * ddq, -2.0 * q * dq / c]
        return Jet2(value, jac, hess)

    return NormalField(base=catenoid(c), eta=VectorField(name="catenoid_gauss", m=2, n=3, jet_fn=jet))


def tilted_plane_normal(theta: float = np.pi / 4) -> NormalField:
    """Constant unit normal (cos θ, 0, -sin θ) of tilted_plane(θ)."""
    normal = [np.cos(theta), 0.0, -np.sin(theta)]
    return NormalField(base=tilted_plane(theta), eta=constant_vector(normal, 2, name="plane_normal"))


def complex_line_normal(a_re: float = 0.5, a_im: float = 0.5) -> NormalField:
    """Constant unit normal (-a_re, a_im, 1, 0) / sqrt(1 + |a|²) of complex_line(a)."""
    normal = np.array([-a_re, a_im, 1.0, 0.0]) / np.sqrt(1.0 + a_re**2 + a_im**2)
    return NormalField(base=complex_line(a_re, a_im), eta=constant_vector(normal, 2, name="complex_normal"))


_CORPUS_FAMILIES: tuple[Callable[[np.random.Generator], NormalField], ...] = (
    lambda rng: sphere_normal(rng.uniform(0.8, 2.0), True, rng.uniform(0.5, 1.5)),
    lambda rng: sphere_normal(rng.uniform(0.8, 2.0), False),
    lambda rng: circle_rotating(rng.uniform(0.8, 2.0), rng.uniform(0.5, 2.0)),
    lambda rng: strip_rotating(rng.uniform(0.5, 2.0), rng.uniform(0.5, 1.5)),
    lambda rng: catenoid_gauss(rng.uniform(0.8, 1.5)),
    lambda rng: tilted_plane_normal(rng.uniform(0.1, 1.4)),
)


def offset_corpus(rng: np.random.Generator, count: int = 50) -> list[NormalField]:
    """``count`` seeded fields cycling through the families above."""
    return [_CORPUS_FAMILIES[i % len(_CORPUS_FAMILIES)](rng) for i in range(count)]


def foliation_examples() -> dict[str, tuple[NormalField, bool]]:
    """Leaf families and whether they should be confirmed totally geodesic."""
    return {
        "parallel_planes": (tilted_plane_normal(0.6), True),
        "nested_spheres": (sphere_normal(1.0, True), False),
        "parallel_complex_lines": (complex_line_normal(), True),
    }
