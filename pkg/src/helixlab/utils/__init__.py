"""Utility modules for Helix Lab."""

from helixlab.utils.exceptions import (
    ConfigurationError,
    ContractViolation,
    DegenerateImmersionError,
    HelixLabError,
    ImmersionDegeneratesAtT,
    InsufficientGridError,
    InvalidChartError,
    NonComplexSubmanifoldError,
    NonPositiveDefiniteError,
    NotEikonalError,
    PoleError,
    PolySpecError,
    SingularMatrixError,
    SingularOffsetMetricError,
    VerticalDirectionError,
)

__all__ = [
    "ConfigurationError",
    "ContractViolation",
    "DegenerateImmersionError",
    "HelixLabError",
    "ImmersionDegeneratesAtT",
    "InsufficientGridError",
    "InvalidChartError",
    "NonComplexSubmanifoldError",
    "NonPositiveDefiniteError",
    "NotEikonalError",
    "PoleError",
    "PolySpecError",
    "SingularMatrixError",
    "SingularOffsetMetricError",
    "VerticalDirectionError",
]
