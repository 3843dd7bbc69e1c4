"""Normalized linear ODEs ``g^(k) + b_{k-2} g^(k-2) + ... + b_0 g = 0``."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from ldeconf.conformal.domains import DomainBase
from ldeconf.jetcalc.jet import ComplexJet
from ldeconf.lde.exceptions import DomainMismatchError, LDEError
from ldeconf.lde.functions import AnalyticFunction, Evaluator

MAX_ORDER = 8


@dataclass(frozen=True)
class LinearODE:
    """Order-k equation without a ``g^(k-1)`` term.

    Attributes:
        order: k >= 2
        coeffs: ``b_0, ..., b_{k-2}`` in increasing derivative order
        domain: Common domain of the coefficients
        descriptor: Serialisable description, when the ODE came from one
    """

    order: int
    coeffs: tuple[AnalyticFunction, ...]
    domain: DomainBase
    descriptor: Any | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if not 2 <= self.order <= MAX_ORDER:
            raise LDEError(
                "ODE order out of supported range", {"order": self.order, "max": MAX_ORDER}
            )
        if len(self.coeffs) != self.order - 1:
            raise LDEError(
                "Order-k ODE needs exactly k - 1 coefficients",
                {"order": self.order, "given": len(self.coeffs)},
            )
        for index, coeff in enumerate(self.coeffs):
            if coeff.domain != self.domain:
                raise DomainMismatchError(
                    "Coefficient domain differs from the ODE domain", {"index": index}
                )

    def coefficient_jets(self, z: complex, order: int) -> list[ComplexJet]:
        return [coeff.jet_at(z, order) for coeff in self.coeffs]

    def coefficient_values(self, z: complex) -> np.ndarray:
        return np.array([coeff.value(z) for coeff in self.coeffs], dtype=np.complex128)


def residual(ode: LinearODE, g: Evaluator, z: complex) -> complex:
    """Relative residual of g in the ODE at z.

    Returns ``g^(k) + sum b_j g^(j)`` divided by
    ``max_j |b_j g^(j)| + |g^(k)|`` when that scale is positive.
    """
    k = ode.order
    derivs = g.jet_at(complex(z), k).derivative_values()
    b = ode.coefficient_values(complex(z))
    terms = b * derivs[: k - 1]
    total = complex(derivs[k] + np.sum(terms))
    scale = float(np.max(np.abs(terms), initial=0.0)) + abs(derivs[k])
    if scale > 0:
        return total / scale
    return total


def max_residual(
    ode: LinearODE, solutions: Sequence[Evaluator], points: Sequence[complex]
) -> float:
    """Largest relative residual over solutions and points."""
    return max(abs(residual(ode, g, z)) for g in solutions for z in points)
