"""Second-order jets of maps and scalar fields, exact or by central differences."""

from collections.abc import Callable
from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike

from helixlab.numerics.linalg import Array
from helixlab.utils.exceptions import ContractViolation

HESSIAN_SYMMETRY_TOL = 1e-8


def _scaled_steps(u: Array, step: float) -> Array:
    return step * np.maximum(1.0, np.abs(u))


@dataclass(frozen=True)
class Jet2:
    """Value, first and second partials of a map R^m -> R^n at one point.

    ``jacobian[:, a]`` is the partial along chart coordinate ``a`` and
    ``hessians[:, a, b]`` the mixed second partial.
    """

    value: Array
    jacobian: Array
    hessians: Array

    def __post_init__(self) -> None:
        value = np.asarray_chkfinite(self.value, dtype=np.float64)
        jacobian = np.asarray_chkfinite(self.jacobian, dtype=np.float64)
        hessians = np.asarray_chkfinite(self.hessians, dtype=np.float64)
        if value.ndim != 1 or jacobian.ndim != 2 or hessians.ndim != 3:
            raise ContractViolation("jet arrays must have ranks 1, 2 and 3")
        n, m = jacobian.shape
        if value.shape != (n,) or hessians.shape != (n, m, m):
            raise ContractViolation(
                f"inconsistent jet shapes {value.shape}, {jacobian.shape}, {hessians.shape}"
            )
        asym = np.max(np.abs(hessians - hessians.transpose(0, 2, 1)), initial=0.0)
        scale = max(1.0, float(np.max(np.abs(hessians), initial=0.0)))
        if asym > HESSIAN_SYMMETRY_TOL * scale:
            raise ContractViolation(f"hessian slices are not symmetric (defect {asym:.2e})")
        object.__setattr__(self, "value", value)
        object.__setattr__(self, "jacobian", jacobian)
        object.__setattr__(self, "hessians", 0.5 * (hessians + hessians.transpose(0, 2, 1)))

    @property
    def m(self) -> int:
        return int(self.jacobian.shape[1])

    @property
    def n(self) -> int:
        return int(self.jacobian.shape[0])

    def combine(self, other: "Jet2", t: float) -> "Jet2":
        """Jet of ``self + t * other``."""
        if other.jacobian.shape != self.jacobian.shape:
            raise ContractViolation("cannot combine jets of different shapes")
        return Jet2(
            value=self.value + t * other.value,
            jacobian=self.jacobian + t * other.jacobian,
            hessians=self.hessians + t * other.hessians,
        )


@dataclass(frozen=True)
class ScalarJet:
    """Value and partials up to third order of a scalar function on a chart.

    ``third`` may be omitted when only second-order quantities are needed.
    """

    value: float
    grad: Array
    hess: Array
    third: Array | None = None

    def __post_init__(self) -> None:
        grad = np.asarray_chkfinite(self.grad, dtype=np.float64)
        hess = np.asarray_chkfinite(self.hess, dtype=np.float64)
        if grad.ndim != 1 or hess.shape != (grad.shape[0], grad.shape[0]):
            raise ContractViolation("scalar jet shapes are inconsistent")
        object.__setattr__(self, "value", float(self.value))
        object.__setattr__(self, "grad", grad)
        object.__setattr__(self, "hess", 0.5 * (hess + hess.T))
        if self.third is not None:
            third = np.asarray_chkfinite(self.third, dtype=np.float64)
            m = grad.shape[0]
            if third.shape != (m, m, m):
                raise ContractViolation("third derivative must have shape (m, m, m)")
            object.__setattr__(self, "third", third)

    @property
    def m(self) -> int:
        return int(self.grad.shape[0])


@dataclass(frozen=True)
class ScalarField:
    """A named scalar function on an m-dimensional chart with exact jets."""

    name: str
    m: int
    jet_fn: Callable[[Array], ScalarJet]

    def jet(self, u: ArrayLike) -> ScalarJet:
        point = np.asarray_chkfinite(u, dtype=np.float64)
        if point.shape != (self.m,):
            raise ContractViolation(f"{self.name}: expected a point of R^{self.m}")
        return self.jet_fn(point)

    def __call__(self, u: ArrayLike) -> float:
        return self.jet(u).value


def fd_jet2(fn: Callable[[Array], ArrayLike], u: ArrayLike, step: float = 1e-5) -> Jet2:
    """Estimate the second-order jet of a black-box map by central differences.

    The step along coordinate ``i`` is ``step * max(1, |u_i|)``. First
    partials use the two-point stencil and second partials the three-point
    (diagonal) and four-point (mixed) stencils, all O(step^2).

    Args:
        fn: Map from R^m to R^n.
        u: Evaluation point.
        step: Base step size.

    Returns:
        Finite-difference jet.
    """
    x = np.asarray_chkfinite(u, dtype=np.float64)
    if x.ndim != 1:
        raise ContractViolation("fd_jet2 expects a 1-D evaluation point")
    if not step > 0:
        raise ContractViolation("step must be positive")

    def evaluate(point: Array) -> Array:
        return np.atleast_1d(np.asarray(fn(point), dtype=np.float64))

    center = evaluate(x)
    m = x.shape[0]
    n = center.shape[0]
    h = _scaled_steps(x, step)
    jac = np.empty((n, m))
    hess = np.empty((n, m, m))

    a = x.copy()
    for i in range(m):
        a[i] = x[i] + h[i]
        f_plus = evaluate(a)
        a[i] = x[i] - h[i]
        f_minus = evaluate(a)
        a[i] = x[i]
        jac[:, i] = (f_plus - f_minus) / (2.0 * h[i])
        hess[:, i, i] = (f_plus - 2.0 * center + f_minus) / h[i] ** 2

        for j in range(i + 1, m):
            a[i], a[j] = x[i] + h[i], x[j] + h[j]
            f_pp = evaluate(a)
            a[j] = x[j] - h[j]
            f_pm = evaluate(a)
            a[i] = x[i] - h[i]
            f_mm = evaluate(a)
            a[j] = x[j] + h[j]
            f_mp = evaluate(a)
            a[i], a[j] = x[i], x[j]
            mixed = (f_pp - f_pm - f_mp + f_mm) / (4.0 * h[i] * h[j])
            hess[:, i, j] = mixed
            hess[:, j, i] = mixed

    return Jet2(value=center, jacobian=jac, hessians=hess)


def fd_derivative(fn: Callable[[Array], ArrayLike], u: ArrayLike, step: float = 1e-5) -> Array:
    """Central-difference partials of an array-valued function.

    Returns an array whose leading axis indexes the chart coordinate.
    """
    x = np.asarray_chkfinite(u, dtype=np.float64)
    h = _scaled_steps(x, step)
    slices = []
    for i in range(x.shape[0]):
        plus, minus = x.copy(), x.copy()
        plus[i] += h[i]
        minus[i] -= h[i]
        diff = np.asarray(fn(plus), dtype=np.float64) - np.asarray(fn(minus), dtype=np.float64)
        slices.append(diff / (2.0 * h[i]))
    return np.stack(slices)
