"""Oscillation Exception Classes

Exception Hierarchy:
    OscillationError (base)
    ├── ZeroCountingError: argument-principle count does not settle on an integer
    ├── QuadratureConvergenceError: refinement did not reach the requested accuracy
    └── FitError: growth-exponent fit has too few or invalid samples
"""

from typing import Any


class OscillationError(Exception):
    """Base exception for oscillation computations.

    Attributes:
        message: Error message
        details: Additional context
    """

    def __init__(self, message: str, details: dict[str, Any] | None = None) -> None:
        super().__init__(message)
        self.message = message
        self.details = details or {}

    def __str__(self) -> str:
        parts = [self.message]
        if self.details:
            parts.extend(f"{key}={value}" for key, value in self.details.items())
        return " | ".join(parts)


class ZeroCountingError(OscillationError):
    """A zero cluster sits on the contour for every perturbed radius.

    Attributes:
        radius: Contour radius that could not be counted
    """

    def __init__(self, message: str, radius: float, details: dict[str, Any] | None = None) -> None:
        merged = {"radius": radius}
        merged.update(details or {})
        super().__init__(message, merged)
        self.radius = radius


class QuadratureConvergenceError(OscillationError):
    """Grid refinement kept changing the result.

    Attributes:
        last_values: The last two estimates
    """

    def __init__(self, message: str, last_values: tuple[float, float]) -> None:
        super().__init__(message, {"last_values": last_values})
        self.last_values = last_values


class FitError(OscillationError):
    """Samples cannot be fitted."""
