"""Parametrized immersions into Euclidean space with exact second-order jets."""

from collections.abc import Callable
from dataclasses import dataclass, field
from typing import Any

import numpy as np
from numpy.typing import ArrayLike

from helixlab.numerics.jets import Jet2, ScalarField
from helixlab.numerics.linalg import Array, sym_eig
from helixlab.numerics.sampling import sample_box
from helixlab.utils.exceptions import ContractViolation, DegenerateImmersionError, InvalidChartError

RANK_TOL = 1e-10


@dataclass(frozen=True)
class GraphInfo:
    """Records that a chart is the graph u -> (base(u), f(u))."""

    base: "ImmersionChart"
    field: ScalarField


@dataclass(frozen=True, eq=False)
class ImmersionChart:
    """A map from an open box of R^m into R^n.

    Attributes:
        name: Label echoed into reports.
        m: Intrinsic dimension.
        n: Ambient dimension.
        domain: Array of shape (m, 2) with the open interval of each coordinate.
        jet_fn: Exact second-order jet at a chart point.
        graph_of: Set when the chart was built by the projection method.
        params: Construction parameters, for reports.
        full_dimensional: Allows m == n (flat coordinate charts only).
    """

    name: str
    m: int
    n: int
    domain: Array
    jet_fn: Callable[[Array], Jet2]
    graph_of: GraphInfo | None = None
    params: dict[str, Any] = field(default_factory=dict)
    full_dimensional: bool = False

    def __post_init__(self) -> None:
        domain = np.asarray_chkfinite(self.domain, dtype=np.float64)
        if self.m < 1:
            raise InvalidChartError(f"{self.name}: dimension must be positive")
        if self.m > self.n or (self.m == self.n and not self.full_dimensional):
            raise InvalidChartError(f"{self.name}: need m < n, got m={self.m}, n={self.n}")
        if domain.shape != (self.m, 2) or np.any(domain[:, 0] >= domain[:, 1]):
            raise InvalidChartError(f"{self.name}: domain must be a nonempty box of shape ({self.m}, 2)")
        object.__setattr__(self, "domain", domain)

    @property
    def center(self) -> Array:
        return self.domain.mean(axis=1)  # type: ignore[no-any-return]

    @property
    def widths(self) -> Array:
        return self.domain[:, 1] - self.domain[:, 0]  # type: ignore[no-any-return]

    def _as_point(self, u: ArrayLike) -> Array:
        point = np.asarray_chkfinite(u, dtype=np.float64)
        if point.shape != (self.m,):
            raise ContractViolation(f"{self.name}: expected a chart point of R^{self.m}, got {point.shape}")
        return point

    def jet(self, u: ArrayLike) -> Jet2:
        """Exact jet at ``u``."""
        jet = self.jet_fn(self._as_point(u))
        if jet.m != self.m or jet.n != self.n:
            raise ContractViolation(f"{self.name}: jet has shape ({jet.n}, {jet.m})")
        return jet

    def point(self, u: ArrayLike) -> Array:
        """Ambient point at ``u``."""
        return self.jet(u).value

    def contains(self, u: ArrayLike, inset: float = 0.0) -> bool:
        """Check whether ``u`` lies in the domain shrunk by ``inset``."""
        point = self._as_point(u)
        return bool(np.all(point > self.domain[:, 0] + inset) and np.all(point < self.domain[:, 1] - inset))

    def sample_points(self, rng: np.random.Generator, count: int, fd_step: float = 1e-5) -> Array:
        """Draw ``count`` uniform points away from the boundary."""
        return sample_box(self.domain, rng, count, fd_step)

    def metric(self, u: ArrayLike) -> Array:
        """First fundamental form ``J^T J`` in chart coordinates."""
        jac = self.jet(u).jacobian
        return jac.T @ jac  # type: ignore[no-any-return]

    def check_rank(self, u: ArrayLike) -> Jet2:
        """Return the jet at ``u`` after verifying the immersion condition.

        Raises:
            DegenerateImmersionError: If the jacobian is rank deficient.
        """
        jet = self.jet(u)
        eigenvalues, _ = sym_eig(jet.jacobian.T @ jet.jacobian)
        if eigenvalues[-1] <= RANK_TOL * max(1.0, eigenvalues[0]):
            raise DegenerateImmersionError(
                f"{self.name}: jacobian is rank deficient at {np.round(jet.value, 6).tolist()}"
            )
        return jet
