"""Linear Differential Equation Exception Classes

Exception Hierarchy:
    LDEError (base)
    ├── InsufficientOrderError: jet order too small for the requested derivatives
    ├── BranchInconsistencyError: the branch of (T')^beta jumps along a path
    ├── StepUnderflowError: Taylor continuation cannot advance toward the target
    ├── DegenerateBasisError: dependent solutions or a vanishing Wronskian
    ├── ConsistencyError: over-determined coefficient system is inconsistent
    └── DomainMismatchError: coefficients, solutions and maps disagree on the domain
"""

from typing import Any


class LDEError(Exception):
    """Base exception for linear ODE operations.

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


class InsufficientOrderError(LDEError):
    """A jet of higher order is needed than the evaluator can supply."""

    def __init__(self, message: str, requested: int, available: int) -> None:
        super().__init__(message, {"requested": requested, "available": available})
        self.requested = requested
        self.available = available


class BranchInconsistencyError(LDEError):
    """The continued branch of a fractional power is not continuous."""

    def __init__(self, message: str, point: complex, jump: float) -> None:
        super().__init__(message, {"point": point, "jump": jump})
        self.point = point
        self.jump = jump


class StepUnderflowError(LDEError):
    """Continuation stalled near the boundary.

    Attributes:
        last_point: Last center the continuation reached
        last_radius: Modulus of that center
    """

    def __init__(
        self,
        message: str,
        last_point: complex,
        step: float,
        details: dict[str, Any] | None = None,
    ) -> None:
        merged = {"last_point": last_point, "last_radius": abs(last_point), "step": step}
        merged.update(details or {})
        super().__init__(message, merged)
        self.last_point = last_point
        self.last_radius = abs(last_point)
        self.step = step


class DegenerateBasisError(LDEError):
    """Solutions are dependent or a required value vanishes at the point."""


class ConsistencyError(LDEError):
    """The unused equation of an over-determined system does not hold."""

    def __init__(self, message: str, residual: float, tolerance: float) -> None:
        super().__init__(message, {"residual": residual, "tolerance": tolerance})
        self.residual = residual
        self.tolerance = tolerance


class DomainMismatchError(LDEError):
    """Objects that must share a domain do not."""
