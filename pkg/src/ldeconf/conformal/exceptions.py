"""Conformal Map Exception Classes

Exception Hierarchy:
    ConformalMapError (base)
    ├── OutsideDiscError: point not in the open unit disc
    └── OutsideImageError: point not in the image T(D) of the map
"""

from typing import Any


class ConformalMapError(Exception):
    """Base exception for the conformal map catalog.

    Attributes:
        message: Error message
        kind: Map kind involved, if any
        details: Additional context
    """

    def __init__(
        self,
        message: str,
        kind: str | None = None,
        details: dict[str, Any] | None = None,
    ) -> None:
        super().__init__(message)
        self.message = message
        self.kind = kind
        self.details = details or {}

    def __str__(self) -> str:
        parts = [self.message]
        if self.kind:
            parts.append(f"kind={self.kind}")
        if self.details:
            parts.append(f"details={self.details}")
        return " | ".join(parts)


class OutsideDiscError(ConformalMapError):
    """Point lies on or outside the unit circle."""

    def __init__(self, point: complex, kind: str | None = None) -> None:
        details = {"z": point, "abs": abs(point)}
        super().__init__("Point is not in the open unit disc", kind, details)
        self.point = point


class OutsideImageError(ConformalMapError):
    """Point is not in the image of the unit disc."""

    def __init__(self, point: complex, kind: str | None = None, reason: str = "") -> None:
        details: dict[str, Any] = {"w": point}
        if reason:
            details["reason"] = reason
        super().__init__("Point is not in the image of the unit disc", kind, details)
        self.point = point
