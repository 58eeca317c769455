"""Falsification harness for minimal ruled helices."""

import numpy as np

from helixlab.checks.base import BaseCheckSuite
from helixlab.geometry.helix import main_theorem_harness
from helixlab.numerics.comparison import Comparison
from helixlab.report.models import CheckRecord

HARNESS_SAMPLES = 50
RANK_SAMPLES = 500


class HarnessSuite(BaseCheckSuite):
    """Each minimal ruled helix with θ > 0 must be non-full and each with θ = 0 a cylinder."""

    suite = "main-theorem"

    def run(self, rng: np.random.Generator) -> list[CheckRecord]:
        entries = main_theorem_harness(
            samples=min(HARNESS_SAMPLES, self.config.samples),
            tol=self.config.tol,
            rank_samples=RANK_SAMPLES,
            rng=rng,
        )
        for entry in entries:
            note = f"verdict={entry.verdict}, angle={entry.angle:.4f}, rank={entry.affine_rank}/{entry.n}"
            if entry.verdict in ("not-applicable", "non-ruled-candidate"):
                self.observe(f"harness[{entry.chart}]", "main-theorem", entry.angle, note)
            else:
                self.check(Comparison.flag(f"harness[{entry.chart}]", "main-theorem", entry.verdict != "counterexample", note=note))
        return self.records
