"""Builtin immersion charts with hand-written closed-form jets."""

from collections.abc import Callable, Mapping
from typing import Any

import numpy as np
import structlog

from helixlab.immersions.chart import ImmersionChart
from helixlab.immersions.constructions import graph_immersion
from helixlab.immersions.fields import scalar_field
from helixlab.numerics.jets import Jet2
from helixlab.numerics.linalg import Array
from helixlab.utils.exceptions import InvalidChartError

logger = structlog.get_logger(__name__)


def _positive(name: str, value: float) -> float:
    if not value > 0:
        raise InvalidChartError(f"parameter {name} must be positive, got {value}")
    return float(value)


def tilted_plane(theta: float = np.pi / 4) -> ImmersionChart:
    """(u, v) -> (u sin θ, v, u cos θ): a plane at angle θ with e3."""
    if not 0.0 <= theta <= np.pi / 2:
        raise InvalidChartError(f"tilted_plane angle must lie in [0, π/2], got {theta}")
    s, c = np.sin(theta), np.cos(theta)
    jac = np.array([[s, 0.0], [0.0, 1.0], [c, 0.0]])

    def jet(u: Array) -> Jet2:
        return Jet2(jac @ u, jac, np.zeros((3, 2, 2)))

    return ImmersionChart(
        name=f"tilted_plane(theta={theta:g})",
        m=2,
        n=3,
        domain=np.array([[-1.0, 1.0], [-1.0, 1.0]]),
        jet_fn=jet,
        params={"theta": theta},
    )


def plane(n: int = 3) -> ImmersionChart:
    """(u, v) -> (u, v, 0, ..., 0) in R^n."""
    if n < 3:
        raise InvalidChartError("plane needs n >= 3")
    jac = np.zeros((n, 2))
    jac[0, 0] = jac[1, 1] = 1.0

    def jet(u: Array) -> Jet2:
        return Jet2(jac @ u, jac, np.zeros((n, 2, 2)))

    return ImmersionChart(
        name=f"plane(n={n})",
        m=2,
        n=n,
        domain=np.array([[-1.0, 1.0], [-1.0, 1.0]]),
        jet_fn=jet,
        params={"n": n},
    )


def flat(m: int = 2) -> ImmersionChart:
    """Identity coordinates on a box of R^m, the flat base of the projection method.

    The first axis is kept away from the origin so radial fields stay smooth.
    """
    if m < 1:
        raise InvalidChartError("flat needs m >= 1")
    domain = np.array([[0.2, 1.5]] + [[-1.0, 1.0]] * (m - 1))
    eye = np.eye(m)

    def jet(u: Array) -> Jet2:
        return Jet2(u.copy(), eye, np.zeros((m, m, m)))

    return ImmersionChart(
        name=f"flat(m={m})",
        m=m,
        n=m,
        domain=domain,
        jet_fn=jet,
        params={"m": m},
        full_dimensional=True,
    )


_PROFILES: dict[str, Callable[[float, float], tuple[Array, Array, Array]]] = {
    "circle": lambda s, r: (
        r * np.array([np.cos(s), np.sin(s)]),
        r * np.array([-np.sin(s), np.cos(s)]),
        r * np.array([-np.cos(s), -np.sin(s)]),
    ),
    "parabola": lambda s, r: (
        np.array([s, r * s * s]),
        np.array([1.0, 2.0 * r * s]),
        np.array([0.0, 2.0 * r]),
    ),
    "catenary": lambda s, r: (
        np.array([s, r * np.cosh(s / r)]),
        np.array([1.0, np.sinh(s / r)]),
        np.array([0.0, np.cosh(s / r) / r]),
    ),
}


def cylinder(profile: str = "circle", axis: str = "z", radius: float = 1.0) -> ImmersionChart:
    """Cylinder over a plane curve, ruled along a coordinate axis.

    Args:
        profile: Plane curve, one of ``circle``, ``parabola``, ``catenary``.
        axis: Ruling axis, one of ``x``, ``y``, ``z``.
        radius: Scale of the profile curve.
    """
    if profile not in _PROFILES:
        raise InvalidChartError(f"unknown cylinder profile '{profile}'")
    if axis not in ("x", "y", "z"):
        raise InvalidChartError(f"unknown cylinder axis '{axis}'")
    r = _positive("radius", radius)
    curve = _PROFILES[profile]
    a = "xyz".index(axis)
    i, j = (k for k in range(3) if k != a)
    s_range = [-3.0, 3.0] if profile == "circle" else [-1.0, 1.0]

    def jet(u: Array) -> Jet2:
        c, dc, ddc = curve(float(u[0]), r)
        value = np.zeros(3)
        jac = np.zeros((3, 2))
        hess = np.zeros((3, 2, 2))
        value[[i, j]] = c
        value[a] = u[1]
        jac[[i, j], 0] = dc
        jac[a, 1] = 1.0
        hess[[i, j], 0, 0] = ddc
        return Jet2(value, jac, hess)

    return ImmersionChart(
        name=f"cylinder(profile={profile}, axis={axis}, radius={r:g})",
        m=2,
        n=3,
        domain=np.array([s_range, [-1.0, 1.0]]),
        jet_fn=jet,
        params={"profile": profile, "axis": axis, "radius": r},
    )


def cone(k: float = 1.0, apex_radius: float = 0.1) -> ImmersionChart:
    """(u, v) -> (u, v, k·sqrt(u² + v²)) on a box that avoids the apex."""
    k = _positive("k", k)
    apex_radius = _positive("apex_radius", apex_radius)
    if apex_radius >= 1.5:
        raise InvalidChartError("apex_radius must be below 1.5")

    def jet(u: Array) -> Jet2:
        r = float(np.linalg.norm(u))
        g = u / r
        jac = np.vstack([np.eye(2), k * g])
        hess = np.zeros((3, 2, 2))
        hess[2] = k * (np.eye(2) - np.outer(g, g)) / r
        return Jet2(np.array([u[0], u[1], k * r]), jac, hess)

    return ImmersionChart(
        name=f"cone(k={k:g})",
        m=2,
        n=3,
        domain=np.array([[apex_radius, 1.5], [-1.0, 1.0]]),
        jet_fn=jet,
        params={"k": k, "apex_radius": apex_radius},
    )


def catenoid(c: float = 1.0) -> ImmersionChart:
    """(u, v) -> (c cosh(v/c) cos u, c cosh(v/c) sin u, v)."""
    c = _positive("c", c)

    def jet(u: Array) -> Jet2:
        phi, v = float(u[0]), float(u[1])
        ch, sh = np.cosh(v / c), np.sinh(v / c)
        cp, sp = np.cos(phi), np.sin(phi)
        value = np.array([c * ch * cp, c * ch * sp, v])
        jac = np.array([[-c * ch * sp, sh * cp], [c * ch * cp, sh * sp], [0.0, 1.0]])
        hess = np.zeros((3, 2, 2))
        hess[:, 0, 0] = [-c * ch * cp, -c * ch * sp, 0.0]
        hess[:, 0, 1] = hess[:, 1, 0] = [-sh * sp, sh * cp, 0.0]
        hess[:, 1, 1] = [ch * cp / c, ch * sp / c, 0.0]
        return Jet2(value, jac, hess)

    return ImmersionChart(
        name=f"catenoid(c={c:g})",
        m=2,
        n=3,
        domain=np.array([[-3.0, 3.0], [-1.0, 1.0]]),
        jet_fn=jet,
        params={"c": c},
    )


def helicoid(c: float = 1.0) -> ImmersionChart:
    """(u, v) -> (v cos u, v sin u, c u)."""
    c = _positive("c", c)

    def jet(u: Array) -> Jet2:
        phi, v = float(u[0]), float(u[1])
        cp, sp = np.cos(phi), np.sin(phi)
        value = np.array([v * cp, v * sp, c * phi])
        jac = np.array([[-v * sp, cp], [v * cp, sp], [c, 0.0]])
        hess = np.zeros((3, 2, 2))
        hess[:, 0, 0] = [-v * cp, -v * sp, 0.0]
        hess[:, 0, 1] = hess[:, 1, 0] = [-sp, cp, 0.0]
        return Jet2(value, jac, hess)

    return ImmersionChart(
        name=f"helicoid(c={c:g})",
        m=2,
        n=3,
        domain=np.array([[-3.0, 3.0], [-1.0, 1.0]]),
        jet_fn=jet,
        params={"c": c},
    )


def round_sphere(r: float = 1.0) -> ImmersionChart:
    """Spherical coordinates (θ, φ) with θ kept away from the poles."""
    r = _positive("r", r)

    def jet(u: Array) -> Jet2:
        theta, phi = float(u[0]), float(u[1])
        st, ct, sp, cp = np.sin(theta), np.cos(theta), np.sin(phi), np.cos(phi)
        value = r * np.array([st * cp, st * sp, ct])
        jac = r * np.array([[ct * cp, -st * sp], [ct * sp, st * cp], [-st, 0.0]])
        hess = np.zeros((3, 2, 2))
        hess[:, 0, 0] = -value
        hess[:, 0, 1] = hess[:, 1, 0] = r * np.array([-ct * sp, ct * cp, 0.0])
        hess[:, 1, 1] = r * np.array([-st * cp, -st * sp, 0.0])
        return Jet2(value, jac, hess)

    return ImmersionChart(
        name=f"round_sphere(r={r:g})",
        m=2,
        n=3,
        domain=np.array([[0.2, np.pi - 0.2], [-3.0, 3.0]]),
        jet_fn=jet,
        params={"r": r},
    )


def circle(r: float = 1.0, n: int = 3, height: float = 0.0) -> ImmersionChart:
    """s -> (r cos s, r sin s, height, 0, ...) in R^n."""
    r = _positive("r", r)
    if n < 2:
        raise InvalidChartError("circle needs n >= 2")
    if n == 2 and height != 0.0:
        raise InvalidChartError("a planar circle has no height coordinate")

    def jet(u: Array) -> Jet2:
        s = float(u[0])
        value = np.zeros(n)
        jac = np.zeros((n, 1))
        hess = np.zeros((n, 1, 1))
        value[:2] = r * np.cos(s), r * np.sin(s)
        if n > 2:
            value[2] = height
        jac[:2, 0] = -r * np.sin(s), r * np.cos(s)
        hess[:2, 0, 0] = -value[:2]
        return Jet2(value, jac, hess)

    return ImmersionChart(
        name=f"circle(r={r:g}, n={n})",
        m=1,
        n=n,
        domain=np.array([[-3.0, 3.0]]),
        jet_fn=jet,
        params={"r": r, "n": n, "height": height},
    )


def complex_parabola() -> ImmersionChart:
    """z -> (z, z²) into C² = R⁴."""

    def jet(u: Array) -> Jet2:
        x, y = float(u[0]), float(u[1])
        value = np.array([x, y, x * x - y * y, 2.0 * x * y])
        jac = np.array([[1.0, 0.0], [0.0, 1.0], [2.0 * x, -2.0 * y], [2.0 * y, 2.0 * x]])
        hess = np.zeros((4, 2, 2))
        hess[2] = [[2.0, 0.0], [0.0, -2.0]]
        hess[3] = [[0.0, 2.0], [2.0, 0.0]]
        return Jet2(value, jac, hess)

    return ImmersionChart(
        name="complex_parabola",
        m=2,
        n=4,
        domain=np.array([[-1.0, 1.0], [-1.0, 1.0]]),
        jet_fn=jet,
    )


def complex_line(a_re: float = 0.5, a_im: float = 0.5) -> ImmersionChart:
    """z -> (z, a·z) into C² = R⁴."""
    jac = np.array([[1.0, 0.0], [0.0, 1.0], [a_re, -a_im], [a_im, a_re]])

    def jet(u: Array) -> Jet2:
        return Jet2(jac @ u, jac, np.zeros((4, 2, 2)))

    return ImmersionChart(
        name=f"complex_line(a={a_re:g}{a_im:+g}i)",
        m=2,
        n=4,
        domain=np.array([[-1.0, 1.0], [-1.0, 1.0]]),
        jet_fn=jet,
        params={"a_re": a_re, "a_im": a_im},
    )


def graph(
    base: str = "flat",
    field: str = "radial",
    base_params: Mapping[str, Any] | None = None,
    **field_params: Any,
) -> ImmersionChart:
    """Projection-method graph of a catalog scalar field over a catalog base."""
    base_chart = builtin(base, base_params)
    return graph_immersion(base_chart, scalar_field(field, base_chart.m, field_params))


_REGISTRY: dict[str, Callable[..., ImmersionChart]] = {
    "tilted_plane": tilted_plane,
    "plane": plane,
    "flat": flat,
    "cylinder": cylinder,
    "cone": cone,
    "catenoid": catenoid,
    "helicoid": helicoid,
    "round_sphere": round_sphere,
    "circle": circle,
    "complex_parabola": complex_parabola,
    "complex_line": complex_line,
    "graph": graph,
}

BUILTIN_NAMES = tuple(_REGISTRY)


def builtin(name: str, params: Mapping[str, Any] | None = None) -> ImmersionChart:
    """Construct a catalog chart.

    Args:
        name: Catalog entry, one of ``BUILTIN_NAMES``.
        params: Keyword parameters of the entry.

    Raises:
        InvalidChartError: Unknown name or invalid parameters.
    """
    factory = _REGISTRY.get(name)
    if factory is None:
        raise InvalidChartError(f"unknown chart '{name}' (known: {', '.join(BUILTIN_NAMES)})")
    try:
        chart = factory(**dict(params or {}))
    except TypeError as e:
        raise InvalidChartError(f"invalid parameters for '{name}': {e}") from e
    logger.debug("Built chart", chart=chart.name, m=chart.m, n=chart.n)
    return chart


def _coerce(raw: str) -> Any:
    for cast in (int, float):
        try:
            return cast(raw)
        except ValueError:
            continue
    return raw


def from_selector(selector: str) -> ImmersionChart:
    """Build a chart from ``name`` or ``name:key=value,key=value``.

    Example: ``cone:k=2`` or ``graph:field=square``.
    """
    name, _, rest = selector.partition(":")
    params: dict[str, Any] = {}
    for item in filter(None, (part.strip() for part in rest.split(","))):
        key, sep, raw = item.partition("=")
        if not sep:
            raise InvalidChartError(f"malformed chart parameter '{item}' in '{selector}'")
        params[key.strip()] = _coerce(raw.strip())
    return builtin(name.strip(), params)
