"""Truncated complex Taylor expansions (jets).

A :class:`ComplexJet` stores the Taylor coefficients ``c_0..c_N`` of an analytic
function at ``center``, with ``c_m = f^(m)(center) / m!``. Arithmetic between
jets truncates at the smaller of the two orders, so the result never claims
more accuracy than its least accurate operand.

    >>> z = ComplexJet.variable(0.0, order=3)
    >>> jet_div(ComplexJet.constant(1.0, 0.0, 3), 1 - z).coeffs
    array([1.+0.j, 1.+0.j, 1.+0.j, 1.+0.j])
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Any

import numpy as np
from numpy.typing import ArrayLike, NDArray

from ldeconf.jetcalc.exceptions import (
    BranchError,
    CenterMismatchError,
    JetError,
    JetOrderError,
    ZeroConstantTermError,
)

# Branch search window for jet_pow anchors: exponents of the form p/q with
# q <= 2 * BRANCH_SEARCH cover every branch.
BRANCH_SEARCH = 64
BRANCH_TOLERANCE = 1e-8

Scalar = complex | float | int


@dataclass(frozen=True, slots=True)
class ComplexJet:
    """Truncated Taylor expansion ``sum c_m (z - center)^m`` for ``m <= order``."""

    center: complex
    coeffs: NDArray[np.complex128] = field(repr=False)

    # numpy scalars defer to the jet operators
    __array_ufunc__ = None

    def __post_init__(self) -> None:
        array = np.array(self.coeffs, dtype=np.complex128).reshape(-1)
        if array.size == 0:
            raise JetError("Jet needs at least one coefficient")
        if not np.all(np.isfinite(array)):
            raise JetError(
                "Jet coefficients must be finite",
                details={"center": complex(self.center)},
            )
        array.setflags(write=False)
        object.__setattr__(self, "coeffs", array)
        object.__setattr__(self, "center", complex(self.center))

    # Construction ---------------------------------------------------------

    @classmethod
    def constant(cls, value: Scalar, center: Scalar, order: int) -> ComplexJet:
        """Jet of a constant function."""
        coeffs = np.zeros(order + 1, dtype=np.complex128)
        coeffs[0] = value
        return cls(complex(center), coeffs)

    @classmethod
    def variable(cls, center: Scalar, order: int) -> ComplexJet:
        """Jet of the identity function ``z`` at ``center``."""
        coeffs = np.zeros(order + 1, dtype=np.complex128)
        coeffs[0] = center
        if order >= 1:
            coeffs[1] = 1.0
        return cls(complex(center), coeffs)

    @classmethod
    def from_derivatives(cls, center: Scalar, derivatives: ArrayLike) -> ComplexJet:
        """Build a jet from values ``f(center), f'(center), ...``."""
        values = np.asarray(derivatives, dtype=np.complex128)
        factorials = np.array([math.factorial(m) for m in range(values.size)], dtype=float)
        return cls(complex(center), values / factorials)

    # Accessors ------------------------------------------------------------

    @property
    def order(self) -> int:
        return int(self.coeffs.size - 1)

    @property
    def value(self) -> complex:
        return complex(self.coeffs[0])

    def derivative_values(self) -> NDArray[np.complex128]:
        """Return ``f^(m)(center)`` for ``m = 0..order``."""
        factorials = np.array([math.factorial(m) for m in range(self.order + 1)], dtype=float)
        return self.coeffs * factorials

    def derivative_value(self, m: int) -> complex:
        if m > self.order:
            raise JetOrderError("Derivative not carried by jet", requested=m, available=self.order)
        return complex(self.coeffs[m] * math.factorial(m))

    def truncate(self, order: int) -> ComplexJet:
        if order > self.order:
            raise JetOrderError(
                "Cannot extend a jet by truncation", requested=order, available=self.order
            )
        return ComplexJet(self.center, self.coeffs[: order + 1])

    # Operators ------------------------------------------------------------

    def __neg__(self) -> ComplexJet:
        return ComplexJet(self.center, -self.coeffs)

    def __add__(self, other: ComplexJet | Scalar) -> ComplexJet:
        if isinstance(other, ComplexJet):
            return jet_add(self, other)
        coeffs = self.coeffs.copy()
        coeffs[0] += other
        return ComplexJet(self.center, coeffs)

    def __radd__(self, other: Scalar) -> ComplexJet:
        return self.__add__(other)

    def __sub__(self, other: ComplexJet | Scalar) -> ComplexJet:
        if isinstance(other, ComplexJet):
            return jet_sub(self, other)
        return self.__add__(-other)

    def __rsub__(self, other: Scalar) -> ComplexJet:
        return (-self).__add__(other)

    def __mul__(self, other: ComplexJet | Scalar) -> ComplexJet:
        if isinstance(other, ComplexJet):
            return jet_mul(self, other)
        return jet_scale(self, other)

    def __rmul__(self, other: Scalar) -> ComplexJet:
        return jet_scale(self, other)

    def __truediv__(self, other: ComplexJet | Scalar) -> ComplexJet:
        if isinstance(other, ComplexJet):
            return jet_div(self, other)
        return jet_scale(self, 1.0 / complex(other))

    def __rtruediv__(self, other: Scalar) -> ComplexJet:
        return jet_div(ComplexJet.constant(other, self.center, self.order), self)

    def __pow__(self, exponent: int) -> ComplexJet:
        if isinstance(exponent, int) and exponent >= 0:
            result = ComplexJet.constant(1.0, self.center, self.order)
            base = self
            n = exponent
            while n:
                if n & 1:
                    result = jet_mul(result, base)
                n >>= 1
                if n:
                    base = jet_mul(base, base)
            return result
        return jet_pow(self, exponent)

    def __call__(self, z: Scalar) -> complex:
        return jet_evaluate(self, z)


def _check_centers(a: ComplexJet, b: ComplexJet) -> None:
    if a.center != b.center:
        raise CenterMismatchError(
            "Jets expanded at different centers", left=a.center, right=b.center
        )


Coeffs = NDArray[np.complex128]


def _common(a: ComplexJet, b: ComplexJet) -> tuple[Coeffs, Coeffs, int]:
    _check_centers(a, b)
    order = min(a.order, b.order)
    return a.coeffs[: order + 1], b.coeffs[: order + 1], order


def jet_add(a: ComplexJet, b: ComplexJet) -> ComplexJet:
    x, y, _ = _common(a, b)
    return ComplexJet(a.center, x + y)


def jet_sub(a: ComplexJet, b: ComplexJet) -> ComplexJet:
    x, y, _ = _common(a, b)
    return ComplexJet(a.center, x - y)


def jet_scale(a: ComplexJet, factor: Scalar) -> ComplexJet:
    return ComplexJet(a.center, a.coeffs * complex(factor))


def jet_mul(a: ComplexJet, b: ComplexJet) -> ComplexJet:
    """Cauchy product truncated at ``min(order_a, order_b)``."""
    x, y, order = _common(a, b)
    return ComplexJet(a.center, np.convolve(x, y)[: order + 1])


def jet_div(a: ComplexJet, b: ComplexJet) -> ComplexJet:
    """Series quotient ``a / b``; ``b.c_0`` must not vanish."""
    x, y, order = _common(a, b)
    if y[0] == 0:
        raise ZeroConstantTermError(
            "Division by a jet with vanishing constant term", details={"center": a.center}
        )
    q = np.zeros(order + 1, dtype=np.complex128)
    for n in range(order + 1):
        q[n] = (x[n] - np.dot(q[:n], y[n:0:-1])) / y[0]
    return ComplexJet(a.center, q)


def jet_exp(a: ComplexJet) -> ComplexJet:
    """Jet of ``exp(a)``."""
    c = a.coeffs
    e = np.zeros_like(c)
    e[0] = cmath.exp(c[0])
    k = np.arange(1, c.size)
    for n in range(1, c.size):
        e[n] = np.dot(k[:n] * c[1 : n + 1], e[n - 1 :: -1][:n]) / n
    return ComplexJet(a.center, e)


def jet_log(a: ComplexJet, branch_log: complex | None = None) -> ComplexJet:
    """Jet of ``log(a)``.

    The constant term is the principal logarithm of ``a.c_0`` unless
    ``branch_log`` (a value of log(a.c_0) on another sheet) is supplied.
    """
    c = a.coeffs
    if c[0] == 0:
        raise ZeroConstantTermError(
            "Logarithm of a jet with vanishing constant term", details={"center": a.center}
        )
    out = np.zeros_like(c)
    if branch_log is None:
        out[0] = cmath.log(c[0])
    else:
        shift = complex(branch_log) - cmath.log(c[0])
        turns = shift.imag / (2 * math.pi)
        if abs(shift.real) > BRANCH_TOLERANCE or abs(turns - round(turns)) > 1e-6:
            raise BranchError(
                "branch_log is not a logarithm of the constant term",
                details={"branch_log": branch_log},
            )
        out[0] = branch_log
    for n in range(1, c.size):
        k = np.arange(1, n)
        out[n] = (c[n] - np.dot(k * out[1:n], c[n - 1 : 0 : -1]) / n) / c[0]
    return ComplexJet(a.center, out)


def _branch_constant(c0: complex, beta: complex, branch_ref: complex | None) -> complex:
    log_c0 = cmath.log(c0)
    if branch_ref is None:
        return cmath.exp(beta * log_c0)
    turns = np.arange(-BRANCH_SEARCH, BRANCH_SEARCH + 1)
    candidates = np.exp(beta * (log_c0 + 2j * math.pi * turns))
    errors = np.abs(candidates - branch_ref)
    best = int(np.argmin(errors))
    scale = max(abs(branch_ref), 1e-300)
    if errors[best] > BRANCH_TOLERANCE * scale:
        raise BranchError(
            "branch_ref is not a value of c_0**beta on any branch",
            details={"c0": c0, "beta": beta, "branch_ref": branch_ref},
        )
    return complex(branch_ref)


def jet_pow(a: ComplexJet, beta: Scalar, branch_ref: complex | None = None) -> ComplexJet:
    """Jet of ``a**beta`` (``exp(beta * log a)``).

    Uses the principal branch of the constant term unless ``branch_ref`` names
    the value of ``a.c_0**beta`` to use; the remaining coefficients follow from
    the recurrence ``a p' = beta a' p``.
    """
    c = a.coeffs
    if c[0] == 0:
        raise ZeroConstantTermError(
            "Power of a jet with vanishing constant term", details={"center": a.center}
        )
    beta = complex(beta)
    p = np.zeros_like(c)
    p[0] = _branch_constant(complex(c[0]), beta, branch_ref)
    for n in range(1, c.size):
        k = np.arange(1, n + 1)
        p[n] = np.dot(((beta + 1) * k - n) * c[1 : n + 1], p[n - 1 :: -1][:n]) / (n * c[0])
    return ComplexJet(a.center, p)


def jet_derivative(a: ComplexJet, m: int) -> ComplexJet:
    """Jet of ``f^(m)``; coefficient ``j`` equals ``c_{j+m} (j+m)!/j!``."""
    if m < 0 or m > a.order:
        raise JetOrderError("Derivative order exceeds jet order", requested=m, available=a.order)
    if m == 0:
        return a
    j = np.arange(a.order - m + 1)
    ratios = np.array([math.perm(int(i) + m, m) for i in j], dtype=float)
    return ComplexJet(a.center, a.coeffs[m:] * ratios)


def jet_compose(outer: ComplexJet, inner: ComplexJet) -> ComplexJet:
    """Jet of ``outer(inner(z))`` at ``inner.center``.

    ``inner.c_0`` must equal ``outer.center`` exactly; the result has order
    ``min(outer.order, inner.order)``.
    """
    if inner.coeffs[0] != outer.center:
        raise CenterMismatchError(
            "Inner constant term differs from outer center",
            left=outer.center,
            right=complex(inner.coeffs[0]),
        )
    order = min(outer.order, inner.order)
    shift = inner.coeffs[: order + 1].copy()
    shift[0] = 0.0
    result = np.zeros(order + 1, dtype=np.complex128)
    for n in range(order, -1, -1):
        result = np.convolve(result, shift)[: order + 1]
        result[0] += outer.coeffs[n]
    return ComplexJet(inner.center, result)


def jet_evaluate(a: ComplexJet, z: Scalar) -> complex:
    """Evaluate the truncated polynomial at ``z``."""
    delta = complex(z) - a.center
    total = 0j
    for c in a.coeffs[::-1]:
        total = total * delta + c
    return total


def jet_recenter(a: ComplexJet, center: Scalar, order: int | None = None) -> ComplexJet:
    """Re-expand the truncated polynomial at ``center``.

    The result is exact for the polynomial; as an approximation of the
    underlying function it is only as good as the truncation allows.
    """
    order = a.order if order is None else order
    if order > a.order:
        raise JetOrderError(
            "Re-centering cannot raise the order", requested=order, available=a.order
        )
    delta = complex(center) - a.center
    powers = delta ** np.arange(a.order + 1)
    coeffs = np.zeros(order + 1, dtype=np.complex128)
    for j in range(order + 1):
        m = np.arange(j, a.order + 1)
        binoms = np.array([math.comb(int(i), j) for i in m], dtype=float)
        coeffs[j] = np.sum(a.coeffs[j:] * binoms * powers[: a.order - j + 1])
    return ComplexJet(complex(center), coeffs)


def max_relative_difference(a: ComplexJet, b: ComplexJet) -> float:
    """Largest coefficient difference scaled by the largest coefficient."""
    x, y, _ = _common(a, b)
    scale = max(float(np.max(np.abs(x))), float(np.max(np.abs(y))), 1e-300)
    return float(np.max(np.abs(x - y)) / scale)


def as_jet(value: Any, center: complex, order: int) -> ComplexJet:
    """Lift scalars to constant jets; pass jets through."""
    if isinstance(value, ComplexJet):
        return value
    return ComplexJet.constant(complex(value), center, order)
