"""Jet Arithmetic Exception Classes

Exception Hierarchy:
    JetError (base)
    ├── CenterMismatchError: operands expanded at different points
    ├── ZeroConstantTermError: division/power/log by a jet with c_0 = 0
    ├── JetOrderError: requested derivative or order exceeds the jet
    ├── BranchError: branch anchor inconsistent with the constant term
    └── BellIndexError: invalid Bell polynomial indices or arguments
"""

from typing import Any


class JetError(Exception):
    """Base exception for jet arithmetic.

    Attributes:
        message: Error message
        details: Additional context
    """

    def __init__(self, message: str, details: dict[str, Any] | None = None) -> None:
        super().__init__(message)
        self.message = message
        self.details = details or {}

    def __str__(self) -> str:
        if self.details:
            return f"{self.message} (details: {self.details})"
        return self.message


class CenterMismatchError(JetError):
    """Operands are not expanded at the same point.

    Attributes:
        left: Center of the first operand
        right: Center (or constant term) of the second operand
    """

    def __init__(
        self,
        message: str,
        left: complex | None = None,
        right: complex | None = None,
        details: dict[str, Any] | None = None,
    ) -> None:
        super().__init__(message, details)
        self.left = left
        self.right = right

    def __str__(self) -> str:
        parts = [self.message]
        if self.left is not None:
            parts.append(f"left={self.left}")
        if self.right is not None:
            parts.append(f"right={self.right}")
        if self.details:
            parts.append(f"details={self.details}")
        return " | ".join(parts)


class ZeroConstantTermError(JetError):
    """The operation needs a jet whose constant term does not vanish."""


class JetOrderError(JetError):
    """The requested order is not available.

    Attributes:
        requested: Requested derivative / order
        available: Order carried by the jet
    """

    def __init__(
        self,
        message: str,
        requested: int | None = None,
        available: int | None = None,
        details: dict[str, Any] | None = None,
    ) -> None:
        super().__init__(message, details)
        self.requested = requested
        self.available = available

    def __str__(self) -> str:
        parts = [self.message]
        if self.requested is not None:
            parts.append(f"requested={self.requested}")
        if self.available is not None:
            parts.append(f"available={self.available}")
        if self.details:
            parts.append(f"details={self.details}")
        return " | ".join(parts)


class BranchError(JetError):
    """A branch anchor does not match any branch of the requested power."""


class BellIndexError(JetError):
    """Invalid indices or argument count for a Bell polynomial."""
