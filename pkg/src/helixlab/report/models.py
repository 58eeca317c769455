"""Pydantic models for run configuration and verification reports."""

import sys
from pathlib import Path
from typing import Literal

if sys.version_info >= (3, 11):
    from typing import Self
else:
    from typing_extensions import Self

from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    PositiveFloat,
    PositiveInt,
    computed_field,
    field_validator,
    model_validator,
)

from helixlab.numerics.comparison import Comparison
from helixlab.numerics.tolerances import Tolerances

Command = Literal["analyze", "offsets", "lemma-la", "sol", "project", "suite"]

# Every record names the relation it checks by one of these.
ANCHORS: frozenset[str] = frozenset(
    {
        # helix analysis
        "helix-angle",
        "eikonal-helix",
        "ruled",
        "cylinder",
        "minimality",
        "structure-equation",
        "laplacian-height",
        "gauss-image",
        "ricci-tangent",
        "relative-nullity",
        "complex-geodesic",
        "complex-bracket",
        "gauss-equation",
        "main-theorem",
        # offsets
        "offset-metric",
        "offset-frames",
        "trace-of-shape",
        "offsets-corollary",
        "foliation-flatness",
        "offset-normal-psd",
        "lemma-bridge",
        # trace identity
        "lemma-la",
        "trace-closed-form",
        "trace-substitution",
        "trace-rationality",
        "kernel-inclusion",
        # Sol
        "sol-connection",
        "sol-curvature",
        "sol-ricci",
        "sol-harmonic",
        "sol-eikonal",
        "sol-not-parallel",
        "sol-ricci-kernel",
        # projection method and metric comparison
        "projection-formulae",
        "volume-form",
        "gradient-relation",
        "connection-relation",
        "hessian-relation",
        "laplacian-relation",
        "ricci-relation",
        "frame-metric",
        "hessian-gradient",
        "gradient-geodesic",
        # harness plumbing
        "suite-error",
    }
)


class TGrid(BaseModel):
    """Uniform grid ``start:stop:count`` of offset parameters."""

    model_config = ConfigDict(frozen=True)

    start: float
    stop: float
    count: int = Field(ge=5, description="At least five offsets are needed")

    @classmethod
    def parse(cls, text: str) -> "TGrid":
        """Parse ``a:b:n``."""
        parts = text.split(":")
        if len(parts) != 3:
            raise ValueError(f"t-grid must look like a:b:n, got '{text}'")
        try:
            return cls(start=float(parts[0]), stop=float(parts[1]), count=int(parts[2]))
        except ValueError as e:
            raise ValueError(f"invalid t-grid '{text}': {e}") from e

    def values(self) -> list[float]:
        if self.count == 1:
            return [self.start]
        step = (self.stop - self.start) / (self.count - 1)
        return [self.start + i * step for i in range(self.count)]


class RunConfig(BaseModel):
    """Validated per-command configuration, echoed into the report."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    command: Command
    chart: str | None = None
    spec: Path | None = None
    direction: list[float] | None = None
    samples: PositiveInt = 100
    tol: PositiveFloat = 1e-6
    seed: int = Field(default=0, ge=0)
    t_grid: TGrid | None = None
    trials: PositiveInt = 500
    max_k: int = Field(default=6, ge=1, le=12)
    fd_step: PositiveFloat = 1e-5
    eq_tol: PositiveFloat = 1e-7
    error_handling: Literal["strict", "lenient"] = "lenient"
    out: Path | None = None

    @field_validator("direction")
    @classmethod
    def nonzero_direction(cls, value: list[float] | None) -> list[float] | None:
        if value is not None and not any(abs(x) > 0.0 for x in value):
            raise ValueError("direction must be a nonzero vector")
        return value

    @model_validator(mode="after")
    def one_chart_source(self) -> Self:
        if self.chart is not None and self.spec is not None:
            raise ValueError("give either a chart name or a spec file, not both")
        return self

    @property
    def tolerances(self) -> Tolerances:
        return Tolerances(fd_step=self.fd_step, eq_tol=self.eq_tol, residual_tol=self.tol, seed=self.seed)


class CheckRecord(BaseModel):
    """One verified relation: computed value, expected value and residual."""

    model_config = ConfigDict(populate_by_name=True)

    suite: str
    name: str
    anchor: str = Field(alias="paper_anchor")
    lhs: float | None
    rhs: float | None
    residual: float | None
    tol: float
    passed: bool = Field(alias="pass")
    detail: str | None = None

    @field_validator("anchor")
    @classmethod
    def known_anchor(cls, value: str) -> str:
        if value not in ANCHORS:
            raise ValueError(f"unknown anchor '{value}'")
        return value

    @classmethod
    def from_comparison(
        cls, suite: str, comparison: Comparison, tol: float, relative: bool = False
    ) -> "CheckRecord":
        return cls(
            suite=suite,
            name=comparison.name,
            anchor=comparison.anchor,
            lhs=comparison.lhs,
            rhs=comparison.rhs,
            residual=comparison.residual,
            tol=tol,
            passed=comparison.holds(tol, relative),
            detail=comparison.note,
        )


class ReportSummary(BaseModel):
    """Pass/fail totals of a report."""

    total: int
    failed: int
    errors: list[str] = Field(default_factory=list)
    suites: dict[str, bool] = Field(default_factory=dict)

    @computed_field  # type: ignore[prop-decorator]
    @property
    def passed(self) -> bool:
        return self.failed == 0 and not self.errors


class Report(BaseModel):
    """Machine-readable outcome of one command."""

    version: str
    command: Command
    config: RunConfig
    records: list[CheckRecord]
    summary: ReportSummary
    passed: bool
    wall_time: float = 0.0

    def to_json(self, include_wall_time: bool = True) -> str:
        """Serialize with record aliases; without the wall time the output is reproducible."""
        exclude = None if include_wall_time else {"wall_time"}
        return self.model_dump_json(indent=2, by_alias=True, exclude=exclude)

    def failed_records(self) -> list[CheckRecord]:
        return [r for r in self.records if not r.passed]
