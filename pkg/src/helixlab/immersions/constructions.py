"""Charts built from other charts: graphs, slice extensions and cylinders."""

import numpy as np
import structlog

from helixlab.immersions.chart import GraphInfo, ImmersionChart
from helixlab.immersions.fields import VectorField
from helixlab.numerics.jets import Jet2, ScalarField
from helixlab.numerics.linalg import Array
from helixlab.utils.exceptions import ContractViolation

logger = structlog.get_logger(__name__)

UNIT_CHECK_SAMPLES = 20


def graph_immersion(base: ImmersionChart, f: ScalarField) -> ImmersionChart:
    """Projection method: u -> (base(u), f(u)) in R^(n+1).

    The appended last coordinate is the direction d of the helix.
    """
    if f.m != base.m:
        raise ContractViolation(f"field {f.name} lives on R^{f.m}, base chart on R^{base.m}")

    def jet(u: Array) -> Jet2:
        b = base.jet(u)
        s = f.jet(u)
        return Jet2(
            value=np.append(b.value, s.value),
            jacobian=np.vstack([b.jacobian, s.grad]),
            hessians=np.concatenate([b.hessians, s.hess[None, :, :]]),
        )

    return ImmersionChart(
        name=f"graph({base.name}, {f.name})",
        m=base.m,
        n=base.n + 1,
        domain=base.domain,
        jet_fn=jet,
        graph_of=GraphInfo(base=base, field=f),
        params={"base": base.name, "field": f.name},
    )


def slice_extension(
    slice_chart: ImmersionChart,
    direction: VectorField,
    s: float,
    tol: float = 1e-6,
    rng: np.random.Generator | None = None,
) -> ImmersionChart:
    """Translate a slice along a unit field: p -> p + s·T(p).

    Args:
        slice_chart: The slice L.
        direction: Unit vector field T along L.
        s: Translation parameter.
        tol: Allowed deviation of |T| from 1.
        rng: Generator for the unit-length validation samples.

    Raises:
        ContractViolation: If T is not unit length at a sampled point.
    """
    if direction.m != slice_chart.m or direction.n != slice_chart.n:
        raise ContractViolation("direction field does not match the slice chart")
    generator = rng if rng is not None else np.random.default_rng(0)
    points = np.vstack([slice_chart.center, slice_chart.sample_points(generator, UNIT_CHECK_SAMPLES)])
    for u in points:
        length = float(np.linalg.norm(direction(u)))
        if abs(length - 1.0) > tol:
            raise ContractViolation(f"direction field has length {length:.6g}, expected 1")

    def jet(u: Array) -> Jet2:
        return slice_chart.jet(u).combine(direction.jet(u), s)

    return ImmersionChart(
        name=f"slice_extension({slice_chart.name}, {direction.name}, s={s:g})",
        m=slice_chart.m,
        n=slice_chart.n,
        domain=slice_chart.domain,
        jet_fn=jet,
        params={"slice": slice_chart.name, "direction": direction.name, "s": s},
    )


def cylinder_over(chart: ImmersionChart, half_width: float = 1.0) -> ImmersionChart:
    """Product of a chart with a line: (u, w) -> (chart(u), w)."""
    m, n = chart.m, chart.n

    def jet(u: Array) -> Jet2:
        b = chart.jet(u[:m])
        jac = np.zeros((n + 1, m + 1))
        jac[:n, :m] = b.jacobian
        jac[n, m] = 1.0
        hess = np.zeros((n + 1, m + 1, m + 1))
        hess[:n, :m, :m] = b.hessians
        return Jet2(np.append(b.value, u[m]), jac, hess)

    return ImmersionChart(
        name=f"cylinder_over({chart.name})",
        m=m + 1,
        n=n + 1,
        domain=np.vstack([chart.domain, [-half_width, half_width]]),
        jet_fn=jet,
        params={"chart": chart.name},
        full_dimensional=chart.full_dimensional,
    )


def ruling_field(k: float, n: int = 3) -> VectorField:
    """Unit ruling direction of the cone z = k·r along a circle chart s -> (cos s, sin s, ...)."""
    scale = 1.0 / np.sqrt(1.0 + k * k)

    def jet(u: Array) -> Jet2:
        s = float(u[0])
        value = np.zeros(n)
        jac = np.zeros((n, 1))
        hess = np.zeros((n, 1, 1))
        value[:3] = scale * np.array([np.cos(s), np.sin(s), k])
        jac[:2, 0] = scale * np.array([-np.sin(s), np.cos(s)])
        hess[:2, 0, 0] = -scale * np.array([np.cos(s), np.sin(s)])
        return Jet2(value, jac, hess)

    return VectorField(name=f"cone_ruling(k={k:g})", m=1, n=n, jet_fn=jet)
