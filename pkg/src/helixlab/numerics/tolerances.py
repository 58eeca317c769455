"""Numerical tolerances shared by every geometric check."""

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, NonNegativeInt, PositiveFloat


class Tolerances(BaseModel):
    """Finite-difference step, comparison tolerances and RNG seed."""

    model_config = ConfigDict(frozen=True)

    fd_step: PositiveFloat = Field(default=1e-5, description="Finite-difference step, scaled by coordinate magnitude")
    eq_tol: PositiveFloat = Field(default=1e-7, description="Equality tolerance")
    residual_tol: PositiveFloat = Field(default=1e-6, description="Geometric residual tolerance")
    seed: NonNegativeInt = Field(default=0, description="Seed of the single RNG")

    def rng(self) -> np.random.Generator:
        """Create the seeded generator every random draw flows from."""
        return np.random.default_rng(self.seed)


DEFAULT_TOLERANCES = Tolerances()
