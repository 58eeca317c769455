"""A trace identity for symmetric matrices and its zero set.

For symmetric D and positive semi-definite N put H = D² + N and

    φ(s) = Tr((D - sH)(𝟏 - 2sD + s²H)^{-1}).

φ is rational with poles at the roots of P(s) = det(𝟏 - 2sD + s²H) and
φ·P is a polynomial of degree at most 2k - 1. If φ vanishes for all small
s then D = N = 0; ``lemma_la_decision`` decides "for all s" on a grid of
2k + 1 pole-free points, which the degree bound makes sufficient.
"""

from collections.abc import Sequence
from dataclasses import dataclass, field

import numpy as np
import structlog
from numpy.typing import ArrayLike

from helixlab.numerics.linalg import Array, adjugate, det, random_symmetric, sym_eig, symmetric, trace
from helixlab.utils.exceptions import ContractViolation, InsufficientGridError, PoleError

logger = structlog.get_logger(__name__)

MAX_DIMENSION = 12
POLE_TOL = 1e-12
PSD_TOL = 1e-10


@dataclass(frozen=True)
class SymmetricTriple:
    """D symmetric, N symmetric positive semi-definite, H = D² + N (derived)."""

    D: Array
    N: Array
    H: Array = field(init=False, repr=False)

    def __post_init__(self) -> None:
        d = symmetric(self.D)
        n = symmetric(self.N)
        if d.shape != n.shape:
            raise ContractViolation(f"D and N must have the same shape, got {d.shape} and {n.shape}")
        if not 1 <= d.shape[0] <= MAX_DIMENSION:
            raise ContractViolation(f"dimension must lie in 1..{MAX_DIMENSION}, got {d.shape[0]}")
        smallest = float(sym_eig(n)[0][-1])
        if smallest < -PSD_TOL * max(1.0, float(np.max(np.abs(n)))):
            raise ContractViolation(f"N is not positive semi-definite (min eigenvalue {smallest:.3e})")
        object.__setattr__(self, "D", d)
        object.__setattr__(self, "N", n)
        object.__setattr__(self, "H", d @ d + n)

    @classmethod
    def zero(cls, k: int) -> "SymmetricTriple":
        return cls(np.zeros((k, k)), np.zeros((k, k)))

    @property
    def k(self) -> int:
        return int(self.D.shape[0])

    def norm(self) -> float:
        """|D| + |N| (Frobenius)."""
        return float(np.linalg.norm(self.D) + np.linalg.norm(self.N))


def _pencil(triple: SymmetricTriple, s: float) -> Array:
    return np.eye(triple.k) - 2.0 * s * triple.D + s * s * triple.H  # type: ignore[no-any-return]


def characteristic(triple: SymmetricTriple, s: float) -> float:
    """P(s) = det(𝟏 - 2sD + s²H)."""
    return det(_pencil(triple, s))


def numerator(triple: SymmetricTriple, s: float) -> float:
    """φ(s)·P(s) = Tr((D - sH) adj(𝟏 - 2sD + s²H)), a polynomial in s."""
    return trace((triple.D - s * triple.H) @ adjugate(_pencil(triple, s)))


def trace_rational(triple: SymmetricTriple, s: float) -> float:
    """φ(s) through the adjugate, away from the roots of P.

    Raises:
        PoleError: If |P(s)| <= 1e-12.
    """
    p = characteristic(triple, s)
    if abs(p) <= POLE_TOL:
        raise PoleError(f"trace function has a pole at s={s:g} (P={p:.2e})", s=s)
    return numerator(triple, s) / p


def substituted_trace(triple: SymmetricTriple, t: float) -> float:
    """ψ(t) = Tr((tD - H)(t²𝟏 - 2tD + H)^{-1}); t·ψ(t) = φ(1/t).

    Raises:
        ContractViolation: If t = 0.
        PoleError: If the bracketed matrix is singular.
    """
    if t == 0.0:
        raise ContractViolation("substituted trace is undefined at t = 0")
    pencil = t * t * np.eye(triple.k) - 2.0 * t * triple.D + triple.H
    p = det(pencil)
    if abs(p) <= POLE_TOL:
        raise PoleError(f"substituted trace has a pole at t={t:g}", s=1.0 / t)
    return trace((t * triple.D - triple.H) @ adjugate(pencil)) / p


@dataclass(frozen=True)
class KernelSplit:
    """ker H and its orthogonal complement, with the blocks of D, N, H there.

    ``inclusion_residual`` is max(|D v|, |N v|) over the kernel basis.
    """

    ker_basis: Array
    complement_basis: Array
    D1: Array
    N1: Array
    H1: Array
    inclusion_residual: float

    @property
    def block_residual(self) -> float:
        """|H1 - (D1² + N1)|."""
        return float(np.linalg.norm(self.H1 - (self.D1 @ self.D1 + self.N1)))


def kernel_split(triple: SymmetricTriple, tol: float = 1e-9) -> KernelSplit:
    """Split R^k as ker H ⊕ (ker H)^⊥ from the eigendecomposition of H."""
    values, vectors = sym_eig(triple.H)
    scale = max(1.0, float(np.max(np.abs(values))))
    in_kernel = np.abs(values) <= tol * scale
    ker, comp = vectors[:, in_kernel], vectors[:, ~in_kernel]
    residual = 0.0
    if ker.shape[1]:
        residual = float(
            max(np.max(np.linalg.norm(triple.D @ ker, axis=0)), np.max(np.linalg.norm(triple.N @ ker, axis=0)))
        )
    return KernelSplit(
        ker_basis=ker,
        complement_basis=comp,
        D1=comp.T @ triple.D @ comp,
        N1=comp.T @ triple.N @ comp,
        H1=comp.T @ triple.H @ comp,
        inclusion_residual=residual,
    )


def default_s_grid(k: int) -> Array:
    """Twice the 2k + 1 points the degree bound needs, inside (0, 1/2]."""
    return np.linspace(0.01, 0.5, 4 * k + 2)


@dataclass(frozen=True)
class LemmaDecision:
    """Grid decision on φ ≡ 0 against D = N = 0.

    ``consistent`` is false exactly for a counterexample: φ vanishing on the
    grid while the triple is nonzero.
    """

    phi_identically_zero: bool
    triple_is_zero: bool
    max_phi: float
    points_used: int
    poles_skipped: int

    @property
    def consistent(self) -> bool:
        return self.triple_is_zero or not self.phi_identically_zero


def lemma_la_decision(
    triple: SymmetricTriple,
    s_grid: Sequence[float] | Array | None = None,
    tol: float = 1e-9,
) -> LemmaDecision:
    """Evaluate φ on the grid (skipping poles) and compare with the triple.

    Raises:
        InsufficientGridError: If fewer than 2k + 1 grid points are pole free.
    """
    grid = default_s_grid(triple.k) if s_grid is None else np.asarray(s_grid, dtype=np.float64)
    values, skipped = [], 0
    for s in grid:
        try:
            values.append(trace_rational(triple, float(s)))
        except PoleError:
            skipped += 1
    needed = 2 * triple.k + 1
    if len(values) < needed:
        raise InsufficientGridError(f"only {len(values)} pole-free grid points, need {needed}")
    max_phi = float(np.max(np.abs(values)))
    return LemmaDecision(
        phi_identically_zero=max_phi < tol,
        triple_is_zero=triple.norm() < tol,
        max_phi=max_phi,
        points_used=len(values),
        poles_skipped=skipped,
    )


def rational_numerator(triple: SymmetricTriple, s_points: ArrayLike) -> Array:
    """Coefficients (ascending) of the degree 2k - 1 polynomial through φ·P at ``s_points``."""
    points = np.asarray(s_points, dtype=np.float64)
    degree = 2 * triple.k - 1
    if points.shape[0] < degree + 1:
        raise InsufficientGridError(f"need {degree + 1} interpolation points, got {points.shape[0]}")
    values = np.array([numerator(triple, float(s)) for s in points])
    return np.polynomial.polynomial.polyfit(points, values, degree)  # type: ignore[no-any-return]


def rationality_residual(triple: SymmetricTriple, held_out: ArrayLike) -> float:
    """Interpolate φ·P on 2k Chebyshev nodes of [-1, 1] and compare
    numerator / P with φ at pole-free held-out points."""
    degree = 2 * triple.k - 1
    nodes = np.cos(np.pi * (np.arange(degree + 1) + 0.5) / (degree + 1))
    coefficients = rational_numerator(triple, nodes)
    worst = 0.0
    for s in np.asarray(held_out, dtype=np.float64):
        try:
            phi = trace_rational(triple, float(s))
        except PoleError:
            continue
        fitted = float(np.polynomial.polynomial.polyval(s, coefficients)) / characteristic(triple, float(s))
        worst = max(worst, abs(fitted - phi) / max(1.0, abs(phi)))
    return worst


def random_triple(
    rng: np.random.Generator,
    k: int,
    scale: float = 1.0,
    rank: int | None = None,
) -> SymmetricTriple:
    """D = (A + Aᵀ)/2 and N = BᵀB with B of ``rank`` rows (random in 0..k by default)."""
    r = int(rng.integers(0, k + 1)) if rank is None else rank
    d = scale * random_symmetric(rng, k)
    b = scale * rng.standard_normal((r, k))
    n = b.T @ b
    return SymmetricTriple(d, 0.5 * (n + n.T))


def commuting_triple(rng: np.random.Generator, k: int, kernel_dim: int) -> SymmetricTriple:
    """D and N diagonal in one random orthonormal basis, both vanishing on
    its last ``kernel_dim`` vectors."""
    q, _ = np.linalg.qr(rng.standard_normal((k, k)))
    d_diag = rng.standard_normal(k)
    n_diag = np.abs(rng.standard_normal(k))
    d_diag[k - kernel_dim :] = 0.0
    n_diag[k - kernel_dim :] = 0.0
    d = q @ np.diag(d_diag) @ q.T
    n = q @ np.diag(n_diag) @ q.T
    return SymmetricTriple(0.5 * (d + d.T), 0.5 * (n + n.T))


@dataclass(frozen=True)
class PropertyRun:
    """Outcome of the randomized property run."""

    trials: int
    false_positives: int
    zero_phi_count: int
    max_inclusion_residual: float
    max_substitution_residual: float
    notes: list[str] = field(default_factory=list)


def property_run(
    rng: np.random.Generator,
    trials: int = 500,
    max_k: int = 6,
    tol: float = 1e-9,
) -> PropertyRun:
    """Random nonzero triples with k <= ``max_k``: φ must never vanish on the grid,
    ker H must sit in ker D ∩ ker N and t·ψ(t) must equal φ(1/t)."""
    false_positives, zero_phi = 0, 0
    inclusion, substitution = 0.0, 0.0
    notes: list[str] = []
    for trial in range(trials):
        k = int(rng.integers(1, max_k + 1))
        triple = random_triple(rng, k)
        try:
            decision = lemma_la_decision(triple, tol=tol)
        except InsufficientGridError as e:
            notes.append(f"trial {trial}: {e}")
            continue
        zero_phi += int(decision.phi_identically_zero)
        false_positives += int(not decision.consistent)
        inclusion = max(inclusion, kernel_split(triple).inclusion_residual)
        t = float(rng.uniform(1.0, 5.0))
        try:
            phi = trace_rational(triple, 1.0 / t)
            substitution = max(substitution, abs(t * substituted_trace(triple, t) - phi) / max(1.0, abs(phi)))
        except PoleError:
            continue
    logger.info("Trace lemma property run", trials=trials, false_positives=false_positives)
    return PropertyRun(
        trials=trials,
        false_positives=false_positives,
        zero_phi_count=zero_phi,
        max_inclusion_residual=inclusion,
        max_substitution_residual=substitution,
        notes=notes,
    )
