"""Seeded sampling of chart boxes."""

import numpy as np

from helixlab.numerics.linalg import Array
from helixlab.utils.exceptions import ContractViolation

SAMPLE_INSET_FRACTION = 0.05


def sample_box(domain: Array, rng: np.random.Generator, count: int, fd_step: float = 1e-5) -> Array:
    """Draw ``count`` uniform points from an open box, away from its boundary.

    The inset on each axis is the larger of two finite-difference steps and
    a fixed fraction of the axis width.

    Returns:
        Array of shape (count, m).
    """
    if count < 1:
        raise ContractViolation("sample count must be at least 1")
    widths = domain[:, 1] - domain[:, 0]
    inset = np.maximum(2.0 * fd_step, SAMPLE_INSET_FRACTION * widths)
    return rng.uniform(domain[:, 0] + inset, domain[:, 1] - inset, size=(count, domain.shape[0]))
