"""Christoffel symbols, curvature and the calculus of scalar fields on a metric chart.

Curvature follows R(X,Y)Z = -∇_X∇_Y Z + ∇_Y∇_X Z + ∇_[X,Y] Z, the negative
of the more common convention, and Ric(X, Y) = Σ_j <R(X, X_j) Y, X_j>. With
this pairing the Ricci tensor coincides with the usual one (positive on
round spheres).
"""

from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike

from helixlab.intrinsic.metric import MetricChart
from helixlab.numerics.jets import ScalarField
from helixlab.numerics.linalg import Array, gram_schmidt, inv
from helixlab.utils.exceptions import ContractViolation

# R = CURVATURE_SIGN * (∇_X∇_Y - ∇_Y∇_X - ∇_[X,Y])
CURVATURE_SIGN = -1.0


@dataclass(frozen=True)
class CurvaturePack:
    """Connection and curvature at a point.

    ``christoffels[k, i, j] = Γ^k_ij``; ``riemann[i, j, k, l]`` is the l-th
    component of R(∂_i, ∂_j)∂_k; ``lowered[i, j, k, l] = <R(∂_i, ∂_j)∂_k, ∂_l>``.
    """

    metric: Array
    christoffels: Array
    riemann: Array
    lowered: Array
    ricci: Array
    bianchi_residual: float

    def pairing(self, i: int, j: int, k: int, l: int) -> float:
        return float(self.lowered[i, j, k, l])


def _first_kind(dg: Array) -> Array:
    """Γ_{m,ij} = (∂_i g_mj + ∂_j g_mi - ∂_m g_ij) / 2."""
    return 0.5 * (dg.transpose(1, 0, 2) + dg.transpose(1, 2, 0) - dg)  # type: ignore[no-any-return]


def christoffels(metric: MetricChart, u: ArrayLike) -> Array:
    """Γ^k_ij from g and its first partials (Koszul formula on coordinate fields).

    Raises:
        NonPositiveDefiniteError: If the metric is not positive definite at ``u``.
    """
    jet = metric.check_positive(u)
    g_inv = inv(jet.g)
    return np.einsum("km,mij->kij", g_inv, _first_kind(jet.dg))  # type: ignore[no-any-return]


def riemann(metric: MetricChart, u: ArrayLike) -> CurvaturePack:
    """Full curvature pack at ``u`` assembled from Γ and ∂Γ."""
    jet = metric.check_positive(u)
    if jet.ddg is None:
        raise ContractViolation(f"{metric.name}: second partials of the metric are unavailable")
    g_inv = inv(jet.g)
    gamma1 = _first_kind(jet.dg)
    gamma = np.einsum("km,mij->kij", g_inv, gamma1)

    # ∂_l Γ^k_ij
    d_gamma1 = 0.5 * (
        np.einsum("limj->lmij", jet.ddg) + np.einsum("ljmi->lmij", jet.ddg) - jet.ddg
    )
    d_g_inv = -np.einsum("ka,lab,bm->lkm", g_inv, jet.dg, g_inv)
    d_gamma = np.einsum("lkm,mij->lkij", d_g_inv, gamma1) + np.einsum("km,lmij->lkij", g_inv, d_gamma1)

    # usual convention: component l of (∇_i∇_j - ∇_j∇_i)∂_k
    usual = (
        np.einsum("iljk->ijkl", d_gamma)
        - np.einsum("jlik->ijkl", d_gamma)
        + np.einsum("lip,pjk->ijkl", gamma, gamma)
        - np.einsum("ljp,pik->ijkl", gamma, gamma)
    )
    curvature = CURVATURE_SIGN * usual
    lowered = np.einsum("ijkq,ql->ijkl", curvature, jet.g)
    ricci_tensor = np.einsum("jiki->jk", curvature)
    bianchi = curvature + np.einsum("jkil->ijkl", curvature) + np.einsum("kijl->ijkl", curvature)
    return CurvaturePack(
        metric=jet.g,
        christoffels=gamma,
        riemann=curvature,
        lowered=lowered,
        ricci=0.5 * (ricci_tensor + ricci_tensor.T),
        bianchi_residual=float(np.max(np.abs(bianchi), initial=0.0)),
    )


def ricci(metric: MetricChart, u: ArrayLike) -> Array:
    """Ricci tensor in chart coordinates."""
    return riemann(metric, u).ricci


def gradient(metric: MetricChart, f: ScalarField, u: ArrayLike) -> Array:
    """∇f = g^{-1} df in chart coordinates."""
    return inv(metric.g(u)) @ f.jet(u).grad  # type: ignore[no-any-return]


def hessian(metric: MetricChart, f: ScalarField, u: ArrayLike) -> Array:
    """Hess f_ij = ∂_ij f - Γ^k_ij ∂_k f."""
    s = f.jet(u)
    return s.hess - np.einsum("kij,k->ij", christoffels(metric, u), s.grad)  # type: ignore[no-any-return]


def laplacian(metric: MetricChart, f: ScalarField, u: ArrayLike) -> float:
    """Δf = trace_g Hess f."""
    return float(np.sum(inv(metric.g(u)) * hessian(metric, f, u)))


def norm(metric: MetricChart, u: ArrayLike, v: ArrayLike) -> float:
    vec = np.asarray(v, dtype=np.float64)
    return float(np.sqrt(max(vec @ metric.g(u) @ vec, 0.0)))


def gradient_norm(metric: MetricChart, f: ScalarField, u: ArrayLike) -> float:
    df = f.jet(u).grad
    return float(np.sqrt(max(df @ inv(metric.g(u)) @ df, 0.0)))


def gradient_self_derivative(metric: MetricChart, f: ScalarField, u: ArrayLike) -> Array:
    """∇_{∇f} ∇f in chart coordinates."""
    jet = metric.jet(u, second=False)
    s = f.jet(u)
    g_inv = inv(jet.g)
    v = g_inv @ s.grad
    d_g_inv = -np.einsum("ka,lab,bm->lkm", g_inv, jet.dg, g_inv)
    dv = np.einsum("lkm,m->lk", d_g_inv, s.grad) + np.einsum("km,lm->lk", g_inv, s.hess)
    return v @ dv + np.einsum("kij,i,j->k", christoffels(metric, u), v, v)  # type: ignore[no-any-return]


def orthonormal_frame(g: Array, first: ArrayLike) -> Array:
    """g-orthonormal frame (columns) whose first vector is parallel to ``first``."""
    lower = np.linalg.cholesky(g)
    w = [lower.T @ np.asarray(first, dtype=np.float64), *np.eye(g.shape[0])]
    basis = gram_schmidt(w)
    if len(basis) != g.shape[0]:
        raise ContractViolation("could not build a g-orthonormal frame")
    return np.linalg.solve(lower.T, np.column_stack(basis))  # type: ignore[no-any-return]


@dataclass(frozen=True)
class EikonalReport:
    norm_mean: float
    spread: float
    is_eikonal: bool


def eikonal_check(
    metric: MetricChart,
    f: ScalarField,
    samples: int = 100,
    tol: float = 1e-6,
    rng: np.random.Generator | None = None,
) -> EikonalReport:
    """Spread of |∇f| over seeded samples; eikonal iff the spread is below ``tol``."""
    generator = rng if rng is not None else np.random.default_rng(0)
    norms = np.array([gradient_norm(metric, f, u) for u in metric.sample_points(generator, samples)])
    spread = float(np.max(norms) - np.min(norms))
    return EikonalReport(norm_mean=float(np.mean(norms)), spread=spread, is_eikonal=spread < tol)
