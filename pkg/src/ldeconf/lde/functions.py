"""Analytic function handles.

An :class:`Evaluator` produces jets of any order at points of its domain.
Coefficients of an ODE are :class:`AnalyticFunction` instances, solutions
are evaluators produced by the solver, closed-form families or combinations
of other evaluators.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from collections.abc import Callable, Sequence
from typing import Any

import numpy as np
from numpy.typing import ArrayLike, NDArray

from ldeconf.conformal.domains import DomainBase
from ldeconf.jetcalc.jet import ComplexJet
from ldeconf.lde.exceptions import DomainMismatchError

CArray = NDArray[np.complex128]
FArray = NDArray[np.float64]


class Evaluator(ABC):
    """Source of jets of a single analytic function."""

    def __init__(self, domain: DomainBase) -> None:
        self.domain = domain

    @abstractmethod
    def jet_at(self, z: complex, order: int) -> ComplexJet:
        """Jet of the function at z; centered exactly at z."""

    def value(self, z: complex) -> complex:
        return self.jet_at(complex(z), 0).value

    def values(self, z: ArrayLike) -> CArray:
        points = np.asarray(z, dtype=np.complex128)
        flat = np.array([self.value(p) for p in points.reshape(-1)], dtype=np.complex128)
        return flat.reshape(points.shape)

    def log_derivative(self, z: ArrayLike) -> CArray:
        """g'/g at the points; overridden by families with stable closed forms."""
        points = np.asarray(z, dtype=np.complex128)
        out = np.empty(points.size, dtype=np.complex128)
        for index, p in enumerate(points.reshape(-1)):
            c = self.jet_at(complex(p), 1).coeffs
            out[index] = c[1] / c[0] if c[0] != 0 else np.inf
        return out.reshape(points.shape)

    def log_abs(self, z: ArrayLike) -> FArray:
        """log|g| at the points; overridden where |g| may overflow."""
        with np.errstate(divide="ignore"):
            return np.log(np.abs(self.values(z)))

    def __add__(self, other: Evaluator) -> Evaluator:
        return LinearCombination([self, other], [1.0, 1.0])


class AnalyticFunction(Evaluator):
    """Analytic function given by a jet procedure over a domain.

    Args:
        jet_fn: Callable ``(z, order) -> ComplexJet``
        domain: Domain where the function is analytic
        values_fn: Optional vectorised evaluation
        descriptor: Serialisable description of the function, if any
        name: Label for logs and reports
    """

    def __init__(
        self,
        jet_fn: Callable[[complex, int], ComplexJet],
        domain: DomainBase,
        values_fn: Callable[[CArray], CArray] | None = None,
        descriptor: Any | None = None,
        name: str = "",
    ) -> None:
        super().__init__(domain)
        self._jet_fn = jet_fn
        self._values_fn = values_fn
        self.descriptor = descriptor
        self.name = name

    def jet_at(self, z: complex, order: int) -> ComplexJet:
        return self._jet_fn(complex(z), order)

    def values(self, z: ArrayLike) -> CArray:
        if self._values_fn is None:
            return super().values(z)
        return self._values_fn(np.asarray(z, dtype=np.complex128))

    def __repr__(self) -> str:
        return f"AnalyticFunction({self.name or self.descriptor!r})"


class LinearCombination(Evaluator):
    """``sum w_i g_i`` of evaluators sharing a domain."""

    def __init__(self, terms: Sequence[Evaluator], weights: Sequence[complex]) -> None:
        if not terms or len(terms) != len(weights):
            raise ValueError("terms and weights must be non-empty and of equal length")
        domain = terms[0].domain
        if any(term.domain != domain for term in terms):
            raise DomainMismatchError("Combined evaluators live on different domains")
        super().__init__(domain)
        self.terms = list(terms)
        self.weights = [complex(w) for w in weights]

    def jet_at(self, z: complex, order: int) -> ComplexJet:
        total = self.weights[0] * self.terms[0].jet_at(z, order)
        for weight, term in zip(self.weights[1:], self.terms[1:], strict=True):
            total = total + weight * term.jet_at(z, order)
        return total

    def values(self, z: ArrayLike) -> CArray:
        total = self.weights[0] * self.terms[0].values(z)
        for weight, term in zip(self.weights[1:], self.terms[1:], strict=True):
            total = total + weight * term.values(z)
        return total

    def log_derivative(self, z: ArrayLike) -> CArray:
        """``sum w_i g_i L_i / sum w_i g_i`` from the terms' log-derivatives.

        Points where the values overflow fall back to jets.
        """
        points = np.asarray(z, dtype=np.complex128)
        with np.errstate(all="ignore"):
            parts = [term.values(points) for term in self.terms]
            numerator = sum(
                w * v * term.log_derivative(points)
                for w, v, term in zip(self.weights, parts, self.terms, strict=True)
            )
            denominator = sum(w * v for w, v in zip(self.weights, parts, strict=True))
            out = np.asarray(numerator / denominator, dtype=np.complex128)
        bad = ~np.isfinite(out)
        if np.any(bad):
            out[bad] = super().log_derivative(points[bad])
        return out


class PowerProduct(Evaluator):
    """``prod g_i^{p_i}`` for non-negative integer powers."""

    def __init__(self, factors: Sequence[Evaluator], powers: Sequence[int]) -> None:
        if not factors or len(factors) != len(powers) or any(p < 0 for p in powers):
            raise ValueError("factors need matching non-negative integer powers")
        domain = factors[0].domain
        if any(factor.domain != domain for factor in factors):
            raise DomainMismatchError("Multiplied evaluators live on different domains")
        super().__init__(domain)
        self.factors = list(factors)
        self.powers = [int(p) for p in powers]

    def jet_at(self, z: complex, order: int) -> ComplexJet:
        result = ComplexJet.constant(1.0, z, order)
        for factor, power in zip(self.factors, self.powers, strict=True):
            if power:
                result = result * factor.jet_at(z, order) ** power
        return result

    def values(self, z: ArrayLike) -> CArray:
        result = np.ones(np.shape(z), dtype=np.complex128)
        for factor, power in zip(self.factors, self.powers, strict=True):
            if power:
                result = result * factor.values(z) ** power
        return result

    def log_derivative(self, z: ArrayLike) -> CArray:
        total = np.zeros(np.shape(z), dtype=np.complex128)
        for factor, power in zip(self.factors, self.powers, strict=True):
            if power:
                total = total + power * factor.log_derivative(z)
        return total


def constant_function(value: complex, domain: DomainBase) -> AnalyticFunction:
    """Analytic function with a constant value."""
    value = complex(value)
    return AnalyticFunction(
        lambda z, order: ComplexJet.constant(value, z, order),
        domain,
        values_fn=lambda z: np.full(z.shape, value, dtype=np.complex128),
        name=f"constant({value})",
    )
