"""Randomized and closed-form checks of the trace identity."""

import numpy as np
import structlog

from helixlab.checks.base import BaseCheckSuite
from helixlab.geometry.trace_lemma import (
    SymmetricTriple,
    commuting_triple,
    kernel_split,
    lemma_la_decision,
    property_run,
    random_triple,
    rationality_residual,
    substituted_trace,
    trace_rational,
)
from helixlab.numerics.comparison import Comparison
from helixlab.report.models import CheckRecord

logger = structlog.get_logger(__name__)

DECISION_TOL = 1e-9
CLOSED_FORM_TOL = 1e-10
# random triples may sit close to a pole of φ
RANDOM_TOL = 1e-8
CLOSED_FORM_POINTS = (0.1, 0.25, 0.4)
SUBSTITUTION_POINTS = (1.5, 2.5, 4.0)


class LemmaSuite(BaseCheckSuite):
    """φ ≡ 0 only for D = N = 0, plus the algebra the argument relies on."""

    suite = "lemma-la"

    def run(self, rng: np.random.Generator) -> list[CheckRecord]:
        self._closed_forms()

        zero = lemma_la_decision(SymmetricTriple.zero(3), tol=DECISION_TOL)
        self.check(Comparison.flag("zero_triple_decision", "lemma-la", zero.phi_identically_zero and zero.consistent))

        run = property_run(rng, self.config.trials, self.config.max_k, DECISION_TOL)
        self.check(
            Comparison.scalar(
                "false_positives",
                "lemma-la",
                run.false_positives,
                0.0,
                note=f"trials={run.trials}, max_k={self.config.max_k}, phi_zero={run.zero_phi_count}",
            ),
            tol=0.5,
        )
        self.check(Comparison.scalar("random_kernel_inclusion", "kernel-inclusion", run.max_inclusion_residual, 0.0))
        self.check(
            Comparison.scalar("random_substitution", "trace-substitution", run.max_substitution_residual, 0.0),
            tol=RANDOM_TOL,
        )
        for note in run.notes:
            logger.warning("Property run note", note=note)

        k = min(4, self.config.max_k)
        for kernel_dim in range(1, k):
            split = kernel_split(commuting_triple(rng, k, kernel_dim))
            self.check(
                Comparison.scalar(
                    f"kernel_inclusion[k={k}, dim={kernel_dim}]", "kernel-inclusion", split.inclusion_residual, 0.0
                )
            )
            self.check(
                Comparison.scalar(
                    f"kernel_dimension[k={k}, dim={kernel_dim}]", "kernel-inclusion", split.ker_basis.shape[1], kernel_dim
                ),
                tol=0.5,
            )
            self.check(
                Comparison.scalar(f"block_identity[k={k}, dim={kernel_dim}]", "kernel-inclusion", split.block_residual, 0.0)
            )

        triple = random_triple(rng, k)
        held_out = np.linspace(-0.9, 0.9, 11)
        self.check(
            Comparison.scalar(f"rationality[k={k}]", "trace-rationality", rationality_residual(triple, held_out), 0.0),
            tol=RANDOM_TOL,
        )
        return self.records

    def _closed_forms(self) -> None:
        one = SymmetricTriple(np.eye(1), np.zeros((1, 1)))
        for s in CLOSED_FORM_POINTS:
            self.check(
                Comparison.scalar(f"phi_unit_d[s={s:g}]", "trace-closed-form", trace_rational(one, s), 1.0 / (1.0 - s)),
                tol=CLOSED_FORM_TOL,
            )

        k = 4
        rotation = SymmetricTriple(np.zeros((k, k)), np.eye(k))
        for s in CLOSED_FORM_POINTS:
            self.check(
                Comparison.scalar(
                    f"phi_identity_n[k={k}, s={s:g}]",
                    "trace-closed-form",
                    trace_rational(rotation, s),
                    -k * s / (1.0 + s * s),
                ),
                tol=CLOSED_FORM_TOL,
            )

        mixed = SymmetricTriple(np.diag([0.5, -1.0, 2.0]), np.diag([1.0, 0.0, 0.5]))
        for t in SUBSTITUTION_POINTS:
            self.check(
                Comparison.scalar(
                    f"substitution[t={t:g}]",
                    "trace-substitution",
                    t * substituted_trace(mixed, t),
                    trace_rational(mixed, 1.0 / t),
                ),
                tol=CLOSED_FORM_TOL,
                relative=True,
            )
