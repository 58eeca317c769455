"""Verification suites and the orchestrator that runs them."""

from helixlab.checks.analyze import AnalyzeSuite
from helixlab.checks.base import BaseCheckSuite
from helixlab.checks.harness import HarnessSuite
from helixlab.checks.lemma import LemmaSuite
from helixlab.checks.offsets import OffsetsSuite
from helixlab.checks.orchestrator import CheckOrchestrator
from helixlab.checks.project import ProjectSuite
from helixlab.checks.sol import SolSuite

__all__ = [
    "AnalyzeSuite",
    "BaseCheckSuite",
    "CheckOrchestrator",
    "HarnessSuite",
    "LemmaSuite",
    "OffsetsSuite",
    "ProjectSuite",
    "SolSuite",
]
