"""Base check suite."""

from abc import ABC, abstractmethod

import numpy as np
import structlog

from helixlab.config.settings import Settings
from helixlab.immersions.catalog import from_selector, tilted_plane
from helixlab.immersions.chart import ImmersionChart
from helixlab.immersions.poly import load_poly
from helixlab.numerics.comparison import Comparison
from helixlab.numerics.linalg import Array
from helixlab.report.models import CheckRecord, RunConfig

logger = structlog.get_logger(__name__)


class BaseCheckSuite(ABC):
    """Base class for verification suites.

    A suite turns the outcome of one family of geometric computations into
    ``CheckRecord`` entries. ``run`` receives the generator every random
    draw of the suite comes from.
    """

    suite: str

    def __init__(self, config: RunConfig, settings: Settings) -> None:
        """Initialize the suite.

        Args:
            config: Validated run configuration.
            settings: Application settings.
        """
        self.config = config
        self.settings = settings
        self.tolerances = config.tolerances
        self.records: list[CheckRecord] = []

    @property
    def name(self) -> str:
        return self.suite

    def check(
        self,
        comparison: Comparison,
        tol: float | None = None,
        relative: bool = False,
    ) -> CheckRecord:
        """Record ``comparison`` against ``tol`` (the run tolerance by default)."""
        record = CheckRecord.from_comparison(
            self.name, comparison, self.config.tol if tol is None else tol, relative
        )
        self.records.append(record)
        return record

    def check_all(self, comparisons: list[Comparison], tol: float | None = None, relative: bool = False) -> None:
        for comparison in comparisons:
            self.check(comparison, tol, relative)

    def observe(self, name: str, anchor: str, value: float | None, detail: str) -> CheckRecord:
        """Record a classification outcome that describes the input rather than tests an identity.

        Observations always pass; their verdict is carried in ``detail``.
        """
        record = CheckRecord(
            suite=self.name,
            name=name,
            anchor=anchor,
            lhs=value,
            rhs=None,
            residual=None,
            tol=self.config.tol,
            passed=True,
            detail=detail,
        )
        self.records.append(record)
        return record

    @abstractmethod
    def run(self, rng: np.random.Generator) -> list[CheckRecord]:
        """Run every check of the suite.

        Args:
            rng: Seeded generator.

        Returns:
            The records produced, in a deterministic order.
        """
        pass


def resolve_chart(config: RunConfig, default: ImmersionChart | None = None) -> ImmersionChart:
    """Chart named by ``--spec`` or ``--chart``, else ``default`` (a tilted plane)."""
    if config.spec is not None:
        return load_poly(config.spec)
    if config.chart is not None:
        return from_selector(config.chart)
    return default if default is not None else tilted_plane()


def resolve_direction(config: RunConfig, n: int) -> Array:
    """``--direction`` as given, or the last axis of R^n."""
    if config.direction is None:
        d = np.zeros(n)
        d[-1] = 1.0
        return d
    return np.asarray(config.direction, dtype=np.float64)
