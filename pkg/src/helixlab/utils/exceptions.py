"""Custom exception hierarchy for Helix Lab."""


class HelixLabError(Exception):
    """Base exception for all Helix Lab errors."""

    pass


class ConfigurationError(HelixLabError):
    """Error in application or run configuration."""

    pass


class ContractViolation(HelixLabError):
    """An operation was called with inputs outside its precondition."""

    pass


class SingularMatrixError(HelixLabError):
    """Matrix is singular to working precision."""

    def __init__(self, message: str, det: float) -> None:
        """Initialize singular matrix error.

        Args:
            message: Error message.
            det: Determinant value that triggered the error.
        """
        super().__init__(message)
        self.det = det


class NonPositiveDefiniteError(HelixLabError):
    """A metric matrix is not positive definite."""

    pass


class InvalidChartError(HelixLabError):
    """Unknown catalog entry or invalid chart parameters."""

    pass


class DegenerateImmersionError(HelixLabError):
    """Jacobian of a chart is rank deficient at a point."""

    pass


class PolySpecError(HelixLabError):
    """Error parsing a polynomial immersion specification."""

    def __init__(self, message: str, line: int | None = None, field: str | None = None) -> None:
        """Initialize poly spec error.

        Args:
            message: Error message.
            line: Line number in the spec file, when known.
            field: Dotted field path, when known.
        """
        location = []
        if line is not None:
            location.append(f"line {line}")
        if field is not None:
            location.append(f"field {field}")
        suffix = f" ({', '.join(location)})" if location else ""
        super().__init__(f"{message}{suffix}")
        self.line = line
        self.field = field


class VerticalDirectionError(HelixLabError):
    """The direction is normal to the submanifold, so T is undefined."""

    pass


class NonComplexSubmanifoldError(HelixLabError):
    """The complex structure does not preserve the tangent spaces."""

    pass


class ImmersionDegeneratesAtT(HelixLabError):
    """The offset immersion p + t·η is singular at some sample."""

    def __init__(self, message: str, t: float, det: float) -> None:
        super().__init__(message)
        self.t = t
        self.det = det


class SingularOffsetMetricError(HelixLabError):
    """The offset metric matrix 𝟏 − 2tD + t²H is not invertible."""

    pass


class PoleError(HelixLabError):
    """The trace rational function is evaluated at (or near) a pole."""

    def __init__(self, message: str, s: float) -> None:
        super().__init__(message)
        self.s = s


class InsufficientGridError(HelixLabError):
    """Too few pole-free grid points to decide a rational identity."""

    pass


class NotEikonalError(HelixLabError):
    """A scalar field was required to be eikonal but is not."""

    pass
