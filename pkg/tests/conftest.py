"""Shared test fixtures."""

from collections.abc import Callable, Iterator
from typing import Any

import numpy as np
import pytest

from helixlab.config.settings import Settings, get_settings
from helixlab.immersions.catalog import catenoid, cone, round_sphere, tilted_plane
from helixlab.immersions.chart import ImmersionChart
from helixlab.numerics.tolerances import Tolerances
from helixlab.report.models import RunConfig


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch: pytest.MonkeyPatch) -> Iterator[None]:
    """Keep HELIXLAB_* variables from the developer shell out of the tests."""
    for name in ("SEED", "ERROR_HANDLING", "LOG_LEVEL", "LOG_FILE", "SAMPLES", "RESIDUAL_TOL"):
        monkeypatch.delenv(f"HELIXLAB_{name}", raising=False)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def rng() -> np.random.Generator:
    """Seeded generator."""
    return np.random.default_rng(0)


@pytest.fixture
def tolerances() -> Tolerances:
    """Default tolerances."""
    return Tolerances()


@pytest.fixture
def test_settings() -> Settings:
    """Settings without .env influence."""
    return Settings(_env_file=None)  # type: ignore[call-arg]


@pytest.fixture
def strict_settings() -> Settings:
    """Settings that abort on the first suite error."""
    return Settings(_env_file=None, error_handling="strict")  # type: ignore[call-arg]


@pytest.fixture
def make_config() -> Callable[..., RunConfig]:
    """Factory for run configurations with small sample counts."""

    def factory(command: str = "sol", **overrides: Any) -> RunConfig:
        values: dict[str, Any] = {"command": command, "samples": 10, "seed": 0}
        values.update(overrides)
        return RunConfig(**values)

    return factory


@pytest.fixture
def plane_chart() -> ImmersionChart:
    """Tilted plane at θ = 0.7."""
    return tilted_plane(0.7)


@pytest.fixture
def cone_chart() -> ImmersionChart:
    """Cone z = sqrt(x² + y²)."""
    return cone(1.0)


@pytest.fixture
def sphere_chart() -> ImmersionChart:
    """Unit sphere."""
    return round_sphere(1.0)


@pytest.fixture
def catenoid_chart() -> ImmersionChart:
    """Catenoid with c = 1."""
    return catenoid(1.0)
