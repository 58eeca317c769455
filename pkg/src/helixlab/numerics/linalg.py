"""Small dense linear algebra: symmetric eigensolver, Gram-Schmidt, inverses."""

from collections.abc import Sequence

import numpy as np
from numpy.typing import ArrayLike, NDArray

from helixlab.utils.exceptions import ContractViolation, SingularMatrixError

Array = NDArray[np.float64]

SYMMETRY_TOL = 1e-12
SINGULAR_TOL = 1e-12
MAX_JACOBI_SWEEPS = 100


def as_matrix(values: ArrayLike) -> Array:
    """Convert input to a finite 2-D float array."""
    matrix = np.asarray_chkfinite(values, dtype=np.float64)
    if matrix.ndim != 2:
        raise ContractViolation(f"expected a matrix, got shape {matrix.shape}")
    return matrix


def symmetric(values: ArrayLike) -> Array:
    """Build a symmetric matrix with exact mirror storage.

    The input must already be symmetric to within round-off; the upper
    triangle is mirrored into the lower one.
    """
    matrix = as_matrix(values)
    if matrix.shape[0] != matrix.shape[1]:
        raise ContractViolation(f"symmetric matrix must be square, got {matrix.shape}")
    scale = max(1.0, float(np.max(np.abs(matrix), initial=0.0)))
    if np.max(np.abs(matrix - matrix.T), initial=0.0) > SYMMETRY_TOL * scale:
        raise ContractViolation("matrix is not symmetric")
    upper = np.triu(matrix)
    return upper + np.triu(matrix, 1).T


def sym_eig(matrix: ArrayLike) -> tuple[Array, Array]:
    """Eigen-decompose a symmetric matrix with cyclic Jacobi rotations.

    Args:
        matrix: Symmetric square matrix.

    Returns:
        Eigenvalues in descending order and the matrix whose columns are the
        corresponding orthonormal eigenvectors, so that ``S @ V = V @ diag(w)``.

    Raises:
        ContractViolation: If the matrix is not symmetric.
    """
    a = symmetric(matrix).copy()
    size = a.shape[0]
    vectors = np.eye(size)
    norm = float(np.linalg.norm(a))
    if size <= 1 or norm == 0.0:
        return np.diag(a).copy(), vectors

    eps = np.finfo(np.float64).eps
    for _ in range(MAX_JACOBI_SWEEPS):
        off = float(np.sqrt(np.sum(np.tril(a, -1) ** 2)))
        if off <= eps * norm * size:
            break
        for p in range(size - 1):
            for q in range(p + 1, size):
                apq = a[p, q]
                if abs(apq) <= eps * eps * norm:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                sign = 1.0 if theta >= 0.0 else -1.0
                t = sign / (abs(theta) + np.sqrt(theta * theta + 1.0))
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                # a <- J^T a J with J the (p, q) plane rotation
                col_p, col_q = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p, row_q = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = a[q, p] = 0.0
                vec_p, vec_q = vectors[:, p].copy(), vectors[:, q].copy()
                vectors[:, p] = c * vec_p - s * vec_q
                vectors[:, q] = s * vec_p + c * vec_q

    values = np.diag(a).copy()
    order = np.argsort(-values, kind="stable")
    return values[order], vectors[:, order]


def gram_schmidt(vectors: Sequence[ArrayLike] | Array, tol: float = 1e-10) -> list[Array]:
    """Orthonormalize vectors, dropping those dependent on earlier ones.

    Uses modified Gram-Schmidt with one re-orthogonalization pass.

    Args:
        vectors: Input vectors of a common dimension.
        tol: Vectors whose residual norm falls below this are dropped.

    Returns:
        Orthonormal vectors spanning the same space as the input.
    """
    basis: list[Array] = []
    for raw in vectors:
        v = np.asarray_chkfinite(raw, dtype=np.float64).copy()
        for _ in range(2):
            for b in basis:
                v -= np.dot(b, v) * b
        norm = float(np.linalg.norm(v))
        if norm < tol:
            continue
        basis.append(v / norm)
    return basis


def det(matrix: ArrayLike) -> float:
    """Determinant of a square matrix."""
    return float(np.linalg.det(as_matrix(matrix)))


def trace(matrix: ArrayLike) -> float:
    """Trace of a square matrix."""
    return float(np.trace(as_matrix(matrix)))


def inv(matrix: ArrayLike) -> Array:
    """Invert a square matrix.

    Singularity is judged relative to the Hadamard bound (product of row
    norms), so the test is scale invariant.

    Raises:
        SingularMatrixError: If ``|det| <= 1e-12 * prod(row norms)``.
    """
    m = as_matrix(matrix)
    d = float(np.linalg.det(m))
    scale = float(np.prod(np.linalg.norm(m, axis=1)))
    if abs(d) <= SINGULAR_TOL * scale or scale == 0.0:
        raise SingularMatrixError(f"matrix is singular (det={d:.3e})", det=d)
    return np.linalg.inv(m)  # type: ignore[no-any-return]


def adjugate(matrix: ArrayLike) -> Array:
    """Classical adjoint, ``adj(G) = det(G) G^{-1}`` computed by cofactors."""
    m = as_matrix(matrix)
    size = m.shape[0]
    adj = np.empty_like(m)
    for i in range(size):
        for j in range(size):
            minor = np.delete(np.delete(m, i, axis=0), j, axis=1)
            cofactor = float(np.linalg.det(minor)) if minor.size else 1.0
            adj[j, i] = (-1) ** (i + j) * cofactor
    return adj


def random_symmetric(rng: np.random.Generator, size: int) -> Array:
    """Random symmetric matrix with standard normal entries."""
    a = rng.standard_normal((size, size))
    return symmetric((a + a.T) / 2.0)


def orthonormal_complement(basis: Array, dim: int) -> Array:
    """Complete the columns of ``basis`` to an orthonormal basis of R^dim.

    The standard basis vectors are used in order as reference vectors.

    Returns:
        Matrix of shape ``(dim, dim - r)`` whose columns are orthogonal to the
        columns of ``basis`` and to each other, ``r`` being the rank of ``basis``.
    """
    k = basis.shape[1] if basis.size else 0
    kept = gram_schmidt([basis[:, i] for i in range(k)], tol=1e-8)
    full = gram_schmidt([*kept, *np.eye(dim)], tol=1e-8)
    extra = full[len(kept):]
    if len(extra) != dim - len(kept):
        raise ContractViolation("could not complete orthonormal basis")
    if not extra:
        return np.zeros((dim, 0))
    return np.column_stack(extra)
