"""Offset formulae against brute force, and the minimal-offsets certificate."""

from collections.abc import Callable

import numpy as np
import structlog

from helixlab.checks.base import BaseCheckSuite
from helixlab.config.settings import Settings
from helixlab.geometry.offsets import (
    NormalField,
    catenoid_gauss,
    circle_inward,
    circle_rotating,
    circle_vertical,
    complex_line_normal,
    default_t_grid,
    foliation_examples,
    foliation_flatness_check,
    minimal_offsets_certificate,
    offset_corpus,
    offset_formula_records,
    sphere_normal,
    strip_rotating,
    tilted_plane_normal,
)
from helixlab.numerics.comparison import Comparison
from helixlab.numerics.linalg import Array
from helixlab.report.models import CheckRecord, RunConfig
from helixlab.utils.exceptions import InvalidChartError

logger = structlog.get_logger(__name__)

CORPUS_SIZE = 50
T_PER_FIELD = 5
CERTIFICATE_SAMPLES = 10
CERTIFICATE_T_VALUES = 7

NORMAL_FIELDS: dict[str, Callable[[], NormalField]] = {
    "sphere_outward": lambda: sphere_normal(1.0, True),
    "sphere_inward": lambda: sphere_normal(1.0, False),
    "circle_vertical": circle_vertical,
    "circle_inward": circle_inward,
    "circle_rotating": circle_rotating,
    "strip_rotating": strip_rotating,
    "catenoid_gauss": catenoid_gauss,
    "tilted_plane_normal": tilted_plane_normal,
    "complex_line_normal": complex_line_normal,
}


def normal_field(name: str) -> NormalField:
    """Look up a named normal field.

    Raises:
        InvalidChartError: If ``name`` is unknown.
    """
    factory = NORMAL_FIELDS.get(name)
    if factory is None:
        raise InvalidChartError(f"unknown normal field '{name}' (known: {', '.join(NORMAL_FIELDS)})")
    return factory()


class OffsetsSuite(BaseCheckSuite):
    """Offset metric, frames and trace formula over a seeded corpus of normal fields."""

    suite = "offsets"

    def __init__(self, config: RunConfig, settings: Settings, corpus_size: int = CORPUS_SIZE) -> None:
        super().__init__(config, settings)
        self.corpus_size = corpus_size

    def _fields(self, rng: np.random.Generator) -> list[NormalField]:
        if self.config.chart is not None:
            return [normal_field(self.config.chart)]
        return offset_corpus(rng, self.corpus_size)

    def _t_values(self, field: NormalField, rng: np.random.Generator) -> Array:
        if self.config.t_grid is not None:
            return np.asarray(self.config.t_grid.values())
        return default_t_grid(field, T_PER_FIELD, rng)

    def run(self, rng: np.random.Generator) -> list[CheckRecord]:
        fields = self._fields(rng)
        for index, field in enumerate(fields):
            field.validate(rng)
            label = f"{index}:{field.name}"
            t_values = self._t_values(field, rng)
            u = field.base.sample_points(rng, 1)[0]
            worst: dict[str, Comparison] = {}
            for t in t_values:
                for comparison in offset_formula_records(field, u, float(t)):
                    current = worst.get(comparison.name)
                    if current is None or comparison.residual > current.residual:
                        worst[comparison.name] = comparison
            for comparison in worst.values():
                self.check(comparison.tagged(label), relative=True)

            grid = t_values if self.config.t_grid is not None else default_t_grid(field, CERTIFICATE_T_VALUES, rng)
            certificate = minimal_offsets_certificate(field, grid, CERTIFICATE_SAMPLES, self.config.tol, rng)
            self.check(
                Comparison.flag(
                    f"offsets_minimal_implies_constant[{label}]",
                    "offsets-corollary",
                    certificate.implication_holds,
                    note=f"offsets_minimal={certificate.offsets_minimal}, eta_constant={certificate.eta_constant}",
                )
            )
            self.check(Comparison.flag(f"lemma_bridge[{label}]", "lemma-bridge", certificate.bridge_consistent))

        for family, (field, expected) in foliation_examples().items():
            verdict = foliation_flatness_check(field, default_t_grid(field, T_PER_FIELD, rng), CERTIFICATE_SAMPLES, rng=rng)
            self.check(
                Comparison.flag(
                    f"foliation[{family}]",
                    "foliation-flatness",
                    verdict.verdict == "totally-geodesic",
                    expected,
                    note=verdict.verdict,
                )
            )

        logger.info("Offset corpus checked", fields=len(fields))
        return self.records
