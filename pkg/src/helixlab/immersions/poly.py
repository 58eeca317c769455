"""Polynomial immersions read from JSON specification files."""

import json
import re
import sys
from pathlib import Path

if sys.version_info >= (3, 11):
    from typing import Self
else:
    from typing_extensions import Self

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, NonNegativeInt, PositiveInt, ValidationError, model_validator

from helixlab.immersions.chart import ImmersionChart
from helixlab.numerics.jets import Jet2
from helixlab.numerics.linalg import Array
from helixlab.utils.exceptions import PolySpecError


class PolyTerm(BaseModel):
    """A single term c·u^e."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    c: float = Field(description="Coefficient")
    e: list[NonNegativeInt] = Field(description="Exponent of each chart variable")


class PolySpec(BaseModel):
    """Polynomial map from a box of R^m into R^n, one term list per component."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    m: PositiveInt
    n: PositiveInt
    domain: list[tuple[float, float]]
    components: list[list[PolyTerm]]
    name: str | None = None

    @model_validator(mode="after")
    def check_shapes(self) -> Self:
        if self.m >= self.n:
            raise ValueError(f"need m < n, got m={self.m}, n={self.n}")
        if len(self.domain) != self.m:
            raise ValueError(f"domain must have {self.m} intervals, got {len(self.domain)}")
        for lo, hi in self.domain:
            if not lo < hi:
                raise ValueError(f"empty domain interval [{lo}, {hi}]")
        if len(self.components) != self.n:
            raise ValueError(f"expected {self.n} component lists, got {len(self.components)}")
        for index, terms in enumerate(self.components):
            if not terms:
                raise ValueError(f"component {index}: empty term list")
            for term in terms:
                if len(term.e) != self.m:
                    raise ValueError(f"component {index}: exponent {term.e} must have length {self.m}")
        return self

    def terms_array(self) -> list[tuple[Array, np.ndarray]]:
        """Coefficients and exponent matrices of each component."""
        out = []
        for terms in self.components:
            coefficients = np.array([t.c for t in terms], dtype=np.float64)
            exponents = np.array([t.e for t in terms], dtype=np.int64).reshape(len(terms), self.m)
            out.append((coefficients, exponents))
        return out


def _powers(u: Array, exponents: np.ndarray) -> Array:
    """Π_i u_i^e_i per row, with negative exponents giving 0."""
    valid = np.all(exponents >= 0, axis=1)
    safe = np.where(exponents >= 0, exponents, 0)
    return np.where(valid, np.prod(u[None, :] ** safe, axis=1), 0.0)  # type: ignore[no-any-return]


def poly_chart(spec: PolySpec) -> ImmersionChart:
    """Chart with exact jets from term-wise differentiation."""
    m, n = spec.m, spec.n
    components = spec.terms_array()
    unit = np.eye(m, dtype=np.int64)

    def jet(u: Array) -> Jet2:
        value = np.zeros(n)
        jac = np.zeros((n, m))
        hess = np.zeros((n, m, m))
        for k, (c, e) in enumerate(components):
            value[k] = c @ _powers(u, e)
            for a in range(m):
                jac[k, a] = (c * e[:, a]) @ _powers(u, e - unit[a])
                for b in range(a, m):
                    factor = e[:, a] * (e[:, b] - (1 if a == b else 0))
                    hess[k, a, b] = hess[k, b, a] = (c * factor) @ _powers(u, e - unit[a] - unit[b])
        return Jet2(value, jac, hess)

    return ImmersionChart(
        name=spec.name or f"poly(m={m}, n={n})",
        m=m,
        n=n,
        domain=np.array(spec.domain, dtype=np.float64),
        jet_fn=jet,
        params={"terms": sum(len(t) for t in spec.components)},
    )


def _locate(text: str, loc: tuple[int | str, ...]) -> int | None:
    """Best-effort line of the first named key in a validation location."""
    for part in loc:
        if isinstance(part, str):
            match = re.search(rf'"{re.escape(part)}"\s*:', text)
            if match:
                return text.count("\n", 0, match.start()) + 1
    return None


def parse_poly(text: str) -> PolySpec:
    """Parse and validate a specification document.

    Raises:
        PolySpecError: With line and field diagnostics where available.
    """
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise PolySpecError(f"invalid JSON: {e.msg}", line=e.lineno) from e
    try:
        return PolySpec.model_validate(raw)
    except ValidationError as e:
        first = e.errors()[0]
        loc = tuple(first["loc"])
        field = ".".join(str(p) for p in loc) or None
        raise PolySpecError(first["msg"], line=_locate(text, loc), field=field) from e


def load_poly(path: str | Path) -> ImmersionChart:
    """Read a polynomial immersion from a JSON file."""
    file = Path(path)
    try:
        text = file.read_text(encoding="utf-8")
    except OSError as e:
        raise PolySpecError(f"cannot read {file}: {e}") from e
    spec = parse_poly(text)
    if spec.name is None:
        spec = spec.model_copy(update={"name": file.stem})
    return poly_chart(spec)
