"""A computed quantity set against its independent counterpart."""

from dataclasses import dataclass, replace

import numpy as np
from numpy.typing import ArrayLike


@dataclass(frozen=True)
class Comparison:
    """One relation evaluated numerically.

    ``lhs`` and ``rhs`` are scalars; relations between vectors or
    matrices store their norms there and the norm of the difference as
    ``residual``.
    """

    name: str
    anchor: str
    lhs: float
    rhs: float
    residual: float
    note: str | None = None

    @classmethod
    def scalar(cls, name: str, anchor: str, lhs: float, rhs: float, note: str | None = None) -> "Comparison":
        return cls(name, anchor, float(lhs), float(rhs), abs(float(lhs) - float(rhs)), note)

    @classmethod
    def tensor(
        cls, name: str, anchor: str, lhs: ArrayLike, rhs: ArrayLike, note: str | None = None
    ) -> "Comparison":
        left = np.asarray(lhs, dtype=np.float64)
        right = np.asarray(rhs, dtype=np.float64)
        return cls(
            name,
            anchor,
            float(np.linalg.norm(left)),
            float(np.linalg.norm(right)),
            float(np.linalg.norm(left - right)),
            note,
        )

    @classmethod
    def flag(cls, name: str, anchor: str, value: bool, expected: bool = True, note: str | None = None) -> "Comparison":
        """Boolean outcome encoded as 1.0/0.0 against the expected outcome."""
        return cls.scalar(name, anchor, 1.0 if value else 0.0, 1.0 if expected else 0.0, note)

    def tagged(self, tag: str) -> "Comparison":
        """Copy named ``name[tag]``."""
        return replace(self, name=f"{self.name}[{tag}]")

    def holds(self, tol: float, relative: bool = False) -> bool:
        """Check the residual against ``tol`` (optionally scaled by magnitude)."""
        if not np.isfinite(self.residual):
            return False
        scale = max(1.0, abs(self.lhs), abs(self.rhs)) if relative else 1.0
        return self.residual <= tol * scale
