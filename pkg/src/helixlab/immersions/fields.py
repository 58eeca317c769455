"""Catalog of scalar fields on charts and vector fields along charts."""

from collections.abc import Callable, Sequence
from dataclasses import dataclass
from typing import Any

import numpy as np
from numpy.typing import ArrayLike

from helixlab.numerics.jets import Jet2, ScalarField, ScalarJet
from helixlab.numerics.linalg import Array
from helixlab.utils.exceptions import ContractViolation, InvalidChartError


@dataclass(frozen=True)
class VectorField:
    """An R^n-valued field on an m-dimensional chart with exact jets."""

    name: str
    m: int
    n: int
    jet_fn: Callable[[Array], Jet2]

    def jet(self, u: ArrayLike) -> Jet2:
        point = np.asarray_chkfinite(u, dtype=np.float64)
        if point.shape != (self.m,):
            raise ContractViolation(f"{self.name}: expected a point of R^{self.m}")
        return self.jet_fn(point)

    def __call__(self, u: ArrayLike) -> Array:
        return self.jet(u).value


def constant_vector(vector: ArrayLike, m: int, name: str = "constant") -> VectorField:
    """The same ambient vector at every chart point."""
    value = np.asarray_chkfinite(vector, dtype=np.float64)
    n = value.shape[0]
    jet = Jet2(value=value, jacobian=np.zeros((n, m)), hessians=np.zeros((n, m, m)))
    return VectorField(name=name, m=m, n=n, jet_fn=lambda u: jet)


# Scalar fields


def linear(coefficients: ArrayLike, offset: float = 0.0) -> ScalarField:
    """f(u) = c·u + offset."""
    c = np.asarray_chkfinite(coefficients, dtype=np.float64)
    m = c.shape[0]

    def jet(u: Array) -> ScalarJet:
        return ScalarJet(float(c @ u) + offset, c, np.zeros((m, m)), np.zeros((m, m, m)))

    return ScalarField(name=f"linear({', '.join(f'{x:g}' for x in c)})", m=m, jet_fn=jet)


def coordinate(m: int, index: int) -> ScalarField:
    """f(u) = u[index]."""
    if not 0 <= index < m:
        raise InvalidChartError(f"coordinate index {index} out of range for m={m}")
    field = linear(np.eye(m)[index])
    return ScalarField(name=f"u{index}", m=m, jet_fn=field.jet_fn)


def constant(m: int, value: float = 0.0) -> ScalarField:
    field = linear(np.zeros(m), offset=value)
    return ScalarField(name=f"constant({value:g})", m=m, jet_fn=field.jet_fn)


def radial(m: int, k: float = 1.0) -> ScalarField:
    """f(u) = k·|u|, eikonal with |∇f| = k away from the origin."""

    def jet(u: Array) -> ScalarJet:
        r = float(np.linalg.norm(u))
        if r == 0.0:
            raise ContractViolation("radial field is singular at the origin")
        eye = np.eye(m)
        grad = u / r
        hess = (eye - np.outer(grad, grad)) / r
        third = (
            -(np.einsum("ij,k->ijk", eye, u) + np.einsum("ik,j->ijk", eye, u) + np.einsum("jk,i->ijk", eye, u)) / r**3
            + 3.0 * np.einsum("i,j,k->ijk", u, u, u) / r**5
        )
        return ScalarJet(k * r, k * grad, k * hess, k * third)

    return ScalarField(name=f"radial(k={k:g})", m=m, jet_fn=jet)


def quadratic(weights: Sequence[float]) -> ScalarField:
    """f(u) = Σ w_i u_i², e.g. x² or x² + y²."""
    w = np.asarray_chkfinite(weights, dtype=np.float64)
    m = w.shape[0]

    def jet(u: Array) -> ScalarJet:
        return ScalarJet(float(w @ (u * u)), 2.0 * w * u, np.diag(2.0 * w), np.zeros((m, m, m)))

    return ScalarField(name=f"quadratic({', '.join(f'{x:g}' for x in w)})", m=m, jet_fn=jet)


def cosine(m: int, index: int, amplitude: float = 1.0) -> ScalarField:
    """f(u) = A·cos(u[index]); the height of a spherical chart."""

    def jet(u: Array) -> ScalarJet:
        x = u[index]
        grad = np.zeros(m)
        hess = np.zeros((m, m))
        third = np.zeros((m, m, m))
        grad[index] = -amplitude * np.sin(x)
        hess[index, index] = -amplitude * np.cos(x)
        third[index, index, index] = amplitude * np.sin(x)
        return ScalarJet(amplitude * float(np.cos(x)), grad, hess, third)

    return ScalarField(name=f"cosine(u{index}, {amplitude:g})", m=m, jet_fn=jet)


SCALAR_FIELDS = ("linear", "coordinate", "constant", "radial", "square", "paraboloid", "cosine")


def scalar_field(name: str, m: int, params: dict[str, Any] | None = None) -> ScalarField:
    """Build a catalog scalar field by name.

    Args:
        name: One of ``SCALAR_FIELDS``.
        m: Chart dimension.
        params: Field parameters (``k``, ``index``, ``value``, ``amplitude``,
            ``coefficients``).

    Raises:
        InvalidChartError: For unknown names or bad parameters.
    """
    p = dict(params or {})
    if name == "linear":
        coefficients = p.get("coefficients")
        if coefficients is None:
            coefficients = np.ones(m) / np.sqrt(m)
        if len(coefficients) != m:
            raise InvalidChartError(f"linear field needs {m} coefficients")
        return linear(coefficients, float(p.get("offset", 0.0)))
    if name == "coordinate":
        return coordinate(m, int(p.get("index", m - 1)))
    if name == "constant":
        return constant(m, float(p.get("value", 0.0)))
    if name == "radial":
        return radial(m, float(p.get("k", 1.0)))
    if name == "square":
        return quadratic([1.0] + [0.0] * (m - 1))
    if name == "paraboloid":
        return quadratic([1.0] * min(m, 2) + [0.0] * max(m - 2, 0))
    if name == "cosine":
        return cosine(m, int(p.get("index", 0)), float(p.get("amplitude", 1.0)))
    raise InvalidChartError(f"unknown scalar field '{name}' (known: {', '.join(SCALAR_FIELDS)})")
