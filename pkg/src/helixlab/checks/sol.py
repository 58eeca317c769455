"""The Sol geometry table."""

import numpy as np

from helixlab.checks.base import BaseCheckSuite
from helixlab.intrinsic.sol import sol_verification
from helixlab.report.models import CheckRecord

SOL_TOL = 1e-8


class SolSuite(BaseCheckSuite):
    """Every entry of the Sol connection, curvature and Ricci tables, exact to 1e-8."""

    suite = "sol"

    def run(self, rng: np.random.Generator) -> list[CheckRecord]:
        self.check_all(sol_verification(samples=self.config.samples, rng=rng), tol=min(SOL_TOL, self.config.tol))
        return self.records
