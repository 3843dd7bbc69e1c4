"""Closed-form coefficient and solution families.

The half-plane family

    a(w) = (1 - alpha^2) / (4 w^2) - alpha^2 w^(2 alpha - 2)

has the zero-free solutions ``f_j(w) = w^((1 - alpha)/2) exp(+-w^alpha)``.
Pulled back by ``(1 + z)/(1 - z)`` it becomes

    b(z) = (1 - alpha^2)/(1 - z^2)^2 - 4 alpha^2 (1 + z)^(2 alpha - 2)/(1 - z)^(2 alpha + 2)

with solutions ``g_j = 2^(-1/2) (1 - z)^((1+alpha)/2) (1 + z)^((1-alpha)/2) exp(+-q^alpha)``,
``q = (1 + z)/(1 - z)``. ``g_1 + g_2`` vanishes exactly where
``q^alpha = (2n + 1) pi i / 2``.

Exponential sums ``sum C_j exp(r_j w)`` solve constant-coefficient equations
whose characteristic roots are the ``r_j``.
"""

from __future__ import annotations

import cmath
import math
from collections.abc import Sequence

import numpy as np
from numpy.typing import ArrayLike, NDArray

from ldeconf.conformal.domains import ComplexPlane, DomainBase, HalfPlane, UnitDisc
from ldeconf.conformal.maps import (
    ConformalMapBase,
    HorodiscMap,
    MobiusMap,
    SectorMap,
    StolzPetalMap,
    StripMap,
)
from ldeconf.jetcalc.jet import ComplexJet, jet_exp, jet_pow
from ldeconf.lde.equation import LinearODE
from ldeconf.lde.exceptions import DegenerateBasisError, LDEError
from ldeconf.lde.functions import AnalyticFunction, Evaluator, constant_function

CArray = NDArray[np.complex128]
FArray = NDArray[np.float64]

# Distinct-root threshold for characteristic polynomials.
ROOT_SEPARATION = 1e-8


def stable_tanh(x: CArray) -> CArray:
    """tanh without overflow for large |Re x|."""
    x = np.asarray(x, dtype=np.complex128)
    sign = np.where(x.real >= 0, 1.0, -1.0)
    t = np.exp(-2 * sign * x)
    return sign * (1 - t) / (1 + t)


def log_abs_cosh(x: CArray) -> FArray:
    """log|cosh x| without overflow."""
    x = np.asarray(x, dtype=np.complex128)
    y = np.where(x.real >= 0, 1.0, -1.0) * x
    with np.errstate(divide="ignore"):
        return y.real + np.log(np.abs(1 + np.exp(-2 * y))) - math.log(2)


def log_abs_sinh(x: CArray) -> FArray:
    """log|sinh x| without overflow."""
    x = np.asarray(x, dtype=np.complex128)
    y = np.where(x.real >= 0, 1.0, -1.0) * x
    with np.errstate(divide="ignore"):
        return y.real + np.log(np.abs(1 - np.exp(-2 * y))) - math.log(2)


def _pair_weights(weights: Sequence[float]) -> tuple[float, float]:
    plus, minus = float(weights[0]), float(weights[1])
    if plus == 0.0 and minus == 0.0:
        raise LDEError("Exponential pair needs a nonzero weight")
    return plus, minus


def _pair_log_derivative(power: CArray, plus: float, minus: float) -> CArray:
    """d/dp log(plus e^p + minus e^-p)."""
    if minus == 0.0:
        return np.ones_like(power)
    if plus == 0.0:
        return -np.ones_like(power)
    # same signs give a multiple of cosh(p + shift), opposite signs of sinh
    ratio = stable_tanh(power + 0.5 * math.log(abs(plus / minus)))
    return ratio if plus * minus > 0 else 1 / ratio


def _pair_log_abs(power: CArray, plus: float, minus: float) -> FArray:
    """log|plus e^p + minus e^-p|."""
    if minus == 0.0:
        return math.log(abs(plus)) + power.real
    if plus == 0.0:
        return math.log(abs(minus)) - power.real
    shifted = power + 0.5 * math.log(abs(plus / minus))
    scale = math.log(2 * math.sqrt(abs(plus * minus)))
    if plus * minus > 0:
        return scale + log_abs_cosh(shifted)
    return scale + log_abs_sinh(shifted)


def _pair_jet(power: ComplexJet, plus: float, minus: float) -> ComplexJet:
    total = 0.0 * power
    if plus:
        total = total + plus * jet_exp(power)
    if minus:
        total = total + minus * jet_exp(-power)
    return total


# Half-plane coefficient family -------------------------------------------


def _local_jet(z: complex, order: int, origin: complex, angle: float) -> ComplexJet:
    return (ComplexJet.variable(z, order) - origin) * cmath.exp(-1j * angle)


def example51_coefficient(
    alpha: float, origin: complex = 0.0, angle: float = 0.0, domain: DomainBase | None = None
) -> AnalyticFunction:
    """``a`` in the rotated and shifted variable ``w' = (w - origin) e^{-i angle}``.

    The ODE ``f'' + a f = 0`` then has the solutions of
    :class:`Example51Solution`. The coefficient is analytic off the ray
    ``origin - e^{i angle} [0, inf)``.
    """
    rotation = cmath.exp(-1j * angle)
    origin = complex(origin)
    domain = domain or HalfPlane(origin=origin, angle=angle)

    def jet_fn(z: complex, order: int) -> ComplexJet:
        w = _local_jet(z, order, origin, angle)
        return rotation**2 * ((1 - alpha**2) / 4 / (w * w) - alpha**2 * jet_pow(w, 2 * alpha - 2))

    def values_fn(z: CArray) -> CArray:
        w = (z - origin) * rotation
        return rotation**2 * ((1 - alpha**2) / (4 * w * w) - alpha**2 * w ** (2 * alpha - 2))

    return AnalyticFunction(
        jet_fn, domain, values_fn, name=f"example51(alpha={alpha}, origin={origin}, angle={angle})"
    )


class Example51Solution(Evaluator):
    """``w'^((1 - alpha)/2) (c_+ exp(w'^alpha) + c_- exp(-w'^alpha))`` in the local variable.

    ``sign=+1`` and ``sign=-1`` give the two zero-free solutions; explicit
    ``weights=(c_+, c_-)`` give their combinations.
    """

    def __init__(
        self,
        alpha: float,
        sign: int = 1,
        origin: complex = 0.0,
        angle: float = 0.0,
        domain: DomainBase | None = None,
        weights: Sequence[float] | None = None,
    ) -> None:
        super().__init__(domain or HalfPlane(origin=origin, angle=angle))
        self.alpha = alpha
        if weights is None:
            weights = (1.0, 0.0) if sign >= 0 else (0.0, 1.0)
        self.weights = _pair_weights(weights)
        self.origin = complex(origin)
        self.angle = angle
        self._rotation = cmath.exp(-1j * angle)

    def _local(self, z: ArrayLike) -> CArray:
        return (np.asarray(z, dtype=np.complex128) - self.origin) * self._rotation

    def jet_at(self, z: complex, order: int) -> ComplexJet:
        w = _local_jet(z, order, self.origin, self.angle)
        return jet_pow(w, (1 - self.alpha) / 2) * _pair_jet(jet_pow(w, self.alpha), *self.weights)

    def values(self, z: ArrayLike) -> CArray:
        w = self._local(z)
        plus, minus = self.weights
        power = w**self.alpha
        return w ** ((1 - self.alpha) / 2) * (plus * np.exp(power) + minus * np.exp(-power))

    def log_derivative(self, z: ArrayLike) -> CArray:
        w = self._local(z)
        a = self.alpha
        factor = _pair_log_derivative(w**a, *self.weights)
        return self._rotation * ((1 - a) / (2 * w) + factor * a * w ** (a - 1))

    def log_abs(self, z: ArrayLike) -> FArray:
        w = self._local(z)
        pre = ((1 - self.alpha) / 2) * np.log(np.abs(w))
        return pre + _pair_log_abs(w**self.alpha, *self.weights)

    def __add__(self, other: Evaluator) -> Evaluator:
        if (
            isinstance(other, Example51Solution)
            and (other.alpha, other.origin, other.angle) == (self.alpha, self.origin, self.angle)
            and other.domain == self.domain
        ):
            weights = (self.weights[0] + other.weights[0], self.weights[1] + other.weights[1])
            return Example51Solution(
                self.alpha, 1, self.origin, self.angle, self.domain, weights=weights
            )
        return super().__add__(other)


# Disc family -----------------------------------------------------------------


def example51_disc_coefficient(alpha: float) -> AnalyticFunction:
    """The pulled-back coefficient ``b`` on the unit disc."""

    def jet_fn(z: complex, order: int) -> ComplexJet:
        var = ComplexJet.variable(z, order)
        first = (1 - alpha**2) / ((1 - var * var) ** 2)
        second = jet_pow(1 + var, 2 * alpha - 2) / jet_pow(1 - var, 2 * alpha + 2)
        return first - 4 * alpha**2 * second

    def values_fn(z: CArray) -> CArray:
        ratio = (1 + z) ** (2 * alpha - 2) / (1 - z) ** (2 * alpha + 2)
        return (1 - alpha**2) / (1 - z * z) ** 2 - 4 * alpha**2 * ratio

    return AnalyticFunction(jet_fn, UnitDisc(), values_fn, name=f"example51_disc(alpha={alpha})")


class Example51DiscSolution(Evaluator):
    """``c_+ g_1 + c_- g_2`` for the disc family.

    With ``weights=(1, 0)`` or ``(0, 1)`` this is ``g_1`` or ``g_2``; with
    ``(1, 1)`` it is ``g_1 + g_2 = 2^(1/2) P(z) cosh(q^alpha)``.
    """

    def __init__(self, alpha: float, weights: Sequence[float] = (1.0, 0.0)) -> None:
        super().__init__(UnitDisc())
        self.alpha = alpha
        self.weights = _pair_weights(weights)

    def jet_at(self, z: complex, order: int) -> ComplexJet:
        var = ComplexJet.variable(complex(z), order)
        a = self.alpha
        pre = jet_pow(1 - var, (1 + a) / 2) * jet_pow(1 + var, (1 - a) / 2) / math.sqrt(2)
        return pre * _pair_jet(jet_pow((1 + var) / (1 - var), a), *self.weights)

    def _parts(self, z: ArrayLike) -> tuple[CArray, CArray, CArray]:
        z = np.asarray(z, dtype=np.complex128)
        q = (1 + z) / (1 - z)
        return z, q, q**self.alpha

    def values(self, z: ArrayLike) -> CArray:
        z, _, power = self._parts(z)
        a = self.alpha
        pre = (1 - z) ** ((1 + a) / 2) * (1 + z) ** ((1 - a) / 2) / math.sqrt(2)
        plus, minus = self.weights
        return pre * (plus * np.exp(power) + minus * np.exp(-power))

    def log_derivative(self, z: ArrayLike) -> CArray:
        z, q, power = self._parts(z)
        a = self.alpha
        pre = -(1 + a) / (2 * (1 - z)) + (1 - a) / (2 * (1 + z))
        dpower = a * q ** (a - 1) * 2 / (1 - z) ** 2
        return pre + dpower * _pair_log_derivative(power, *self.weights)

    def log_abs(self, z: ArrayLike) -> FArray:
        z, _, power = self._parts(z)
        a = self.alpha
        pre = (
            ((1 + a) / 2) * np.log(np.abs(1 - z))
            + ((1 - a) / 2) * np.log(np.abs(1 + z))
            - 0.5 * math.log(2)
        )
        return pre + _pair_log_abs(power, *self.weights)

    def __add__(self, other: Evaluator) -> Evaluator:
        if isinstance(other, Example51DiscSolution) and other.alpha == self.alpha:
            plus = self.weights[0] + other.weights[0]
            minus = self.weights[1] + other.weights[1]
            return Example51DiscSolution(self.alpha, (plus, minus))
        return super().__add__(other)


def lattice_zeros_example51(alpha: float, r: float) -> list[complex]:
    """Zeros of ``g_1 + g_2`` in ``|z| < r``, sorted by modulus.

    They are ``z = (q - 1)/(q + 1)`` with
    ``q = ((2m + 1) pi / 2)^(1/alpha) e^(+-i pi / (2 alpha))``, ``m >= 0``;
    there are none for ``alpha <= 1``.
    """
    if alpha <= 1.0:
        return []
    zeros: list[complex] = []
    m = 0
    while True:
        modulus = ((2 * m + 1) * math.pi / 2) ** (1 / alpha)
        found = False
        for sign in (1, -1):
            q = modulus * cmath.exp(sign * 1j * math.pi / (2 * alpha))
            z = (q - 1) / (q + 1)
            if abs(z) < r:
                zeros.append(z)
                found = True
        if not found:
            break
        m += 1
    return sorted(zeros, key=abs)


def example51_origin(T: ConformalMapBase) -> tuple[complex, float]:
    """Origin and angle of the family so that its branch cut avoids T(D)."""
    if isinstance(T, SectorMap):
        return 0.0, T.phi
    if isinstance(T, StolzPetalMap):
        return -0.5 * T.zeta, cmath.phase(T.zeta)
    if isinstance(T, StripMap):
        direction = cmath.exp(1j * (T.phi + math.pi / 2))
        return -(T.alpha * math.pi / 2 + 0.5) * direction, T.phi + math.pi / 2
    if isinstance(T, HorodiscMap):
        return complex(T.zeta) - T.radius - 0.5, 0.0
    if isinstance(T, MobiusMap):
        return _mobius_origin(T)
    raise LDEError("No origin rule for map kind", {"kind": T.kind})


def _mobius_origin(T: MobiusMap) -> tuple[complex, float]:
    inside = complex(T.eval_array(0.0))
    if abs(T.c) < abs(T.d):
        # image is a disc through three boundary images
        p1, p2, p3 = (complex(T.eval_array(cmath.exp(1j * t))) for t in (0.0, 2.0, 4.0))
        center = _circumcenter(p1, p2, p3)
        radius = abs(p1 - center)
        return center - radius - 0.5, 0.0
    # image is a half-plane; its boundary line passes through two boundary images
    pole_angle = cmath.phase(-T.d / T.c)
    p1, p2 = (complex(T.eval_array(cmath.exp(1j * (pole_angle + t)))) for t in (1.0, 2.0))
    direction = (p2 - p1) / abs(p2 - p1)
    foot = p1 + ((inside - p1) * direction.conjugate()).real * direction
    normal = inside - foot
    return foot, cmath.phase(normal)


def _circumcenter(a: complex, b: complex, c: complex) -> complex:
    d = 2 * (a.real * (b.imag - c.imag) + b.real * (c.imag - a.imag) + c.real * (a.imag - b.imag))
    ux = (
        abs(a) ** 2 * (b.imag - c.imag)
        + abs(b) ** 2 * (c.imag - a.imag)
        + abs(c) ** 2 * (a.imag - b.imag)
    ) / d
    uy = (
        abs(a) ** 2 * (c.real - b.real)
        + abs(b) ** 2 * (a.real - c.real)
        + abs(c) ** 2 * (b.real - a.real)
    ) / d
    return complex(ux, uy)


def example51_ode_for_map(alpha: float, T: ConformalMapBase, domain: DomainBase) -> LinearODE:
    """Order-2 ODE with the family coefficient placed so that T(D) avoids its cut."""
    origin, angle = example51_origin(T)
    return LinearODE(2, (example51_coefficient(alpha, origin, angle, domain),), domain)


def example51_basis_for_map(
    alpha: float, T: ConformalMapBase, domain: DomainBase
) -> list[Evaluator]:
    origin, angle = example51_origin(T)
    return [Example51Solution(alpha, sign, origin, angle, domain) for sign in (1, -1)]


# Exponential sums --------------------------------------------------------------


class ExponentialSum(Evaluator):
    """``sum_j C_j exp(r_j w)``."""

    def __init__(
        self,
        roots: Sequence[complex],
        weights: Sequence[complex] | None = None,
        domain: DomainBase | None = None,
    ) -> None:
        super().__init__(domain or ComplexPlane())
        self.roots = np.asarray(roots, dtype=np.complex128)
        if weights is None:
            weights = [1.0] * len(self.roots)
        self.weights = np.asarray(weights, dtype=np.complex128)
        if self.roots.shape != self.weights.shape or self.roots.size == 0:
            raise LDEError("Exponential sum needs matching roots and weights")

    def jet_at(self, z: complex, order: int) -> ComplexJet:
        z = complex(z)
        inv_fact = np.array([1.0 / math.factorial(m) for m in range(order + 1)])
        terms = self.weights * np.exp(self.roots * z)
        powers = self.roots[None, :] ** np.arange(order + 1)[:, None]
        return ComplexJet(z, (powers @ terms) * inv_fact)

    def _shifted(self, z: ArrayLike) -> tuple[CArray, CArray, CArray]:
        w = np.asarray(z, dtype=np.complex128)
        exponents = np.multiply.outer(w, self.roots)
        lead = np.max(exponents.real, axis=-1)
        scaled = self.weights * np.exp(exponents - lead[..., None])
        return w, lead, scaled

    def values(self, z: ArrayLike) -> CArray:
        w = np.asarray(z, dtype=np.complex128)
        return np.exp(np.multiply.outer(w, self.roots)) @ self.weights

    def log_derivative(self, z: ArrayLike) -> CArray:
        _, _, scaled = self._shifted(z)
        return (scaled @ self.roots) / scaled.sum(axis=-1)

    def log_abs(self, z: ArrayLike) -> FArray:
        _, lead, scaled = self._shifted(z)
        with np.errstate(divide="ignore"):
            return lead + np.log(np.abs(scaled.sum(axis=-1)))

    def __add__(self, other: Evaluator) -> Evaluator:
        if isinstance(other, ExponentialSum) and other.domain == self.domain:
            roots = np.concatenate([self.roots, other.roots])
            weights = np.concatenate([self.weights, other.weights])
            return ExponentialSum(roots, weights, self.domain)
        return super().__add__(other)


def characteristic_roots(coeffs: Sequence[complex]) -> CArray:
    """Roots of ``x^k + a_{k-2} x^(k-2) + ... + a_0`` for constants ``a_0..a_{k-2}``."""
    k = len(coeffs) + 1
    poly = np.zeros(k + 1, dtype=np.complex128)
    poly[0] = 1.0
    # numpy.roots expects descending powers; x^(k-1) has coefficient zero
    for j, a in enumerate(coeffs):
        poly[k - j] = a
    return np.roots(poly)


def constant_ode(coeffs: Sequence[complex], domain: DomainBase | None = None) -> LinearODE:
    domain = domain or ComplexPlane()
    functions = tuple(constant_function(a, domain) for a in coeffs)
    return LinearODE(len(coeffs) + 1, functions, domain)


def ode_from_roots(roots: Sequence[complex], domain: DomainBase | None = None) -> LinearODE:
    """Constant-coefficient ODE with the given characteristic roots (summing to zero)."""
    roots = np.asarray(roots, dtype=np.complex128)
    if abs(roots.sum()) > 1e-12 * max(1.0, float(np.max(np.abs(roots)))):
        raise LDEError("Characteristic roots of a normalized ODE must sum to zero")
    poly = np.poly(roots)
    k = roots.size
    coeffs = [complex(poly[k - j]) for j in range(k - 1)]
    return constant_ode(coeffs, domain)


def exponential_basis(ode: LinearODE) -> list[ExponentialSum]:
    """``exp(r_j w)`` for the distinct characteristic roots of a constant ODE."""
    coeffs = [a.value(_sample_point(ode.domain)) for a in ode.coeffs]
    roots = characteristic_roots(coeffs)
    gaps = np.abs(roots[:, None] - roots[None, :]) + np.eye(roots.size)
    if np.min(gaps) < ROOT_SEPARATION:
        raise DegenerateBasisError(
            "Characteristic roots are not distinct", {"roots": roots.tolist()}
        )
    return [ExponentialSum([r], [1.0], ode.domain) for r in roots]


def _sample_point(domain: DomainBase) -> complex:
    for candidate in (0.0, 1.0, 1j, -1.0, -1j):
        if domain.contains(candidate):
            return complex(candidate)
    raise LDEError("Cannot find a sample point in the domain")


# Nevanlinna probe -------------------------------------------------------------


class InnerFunctionProbe(Evaluator):
    """``exp(-q^alpha)``, ``q = (1 + z)/(1 - z)``; an inner function for ``alpha = 1``."""

    def __init__(self, alpha: float) -> None:
        super().__init__(UnitDisc())
        self.alpha = alpha

    def _power(self, z: ArrayLike) -> CArray:
        z = np.asarray(z, dtype=np.complex128)
        return ((1 + z) / (1 - z)) ** self.alpha

    def jet_at(self, z: complex, order: int) -> ComplexJet:
        var = ComplexJet.variable(complex(z), order)
        return jet_exp(-jet_pow((1 + var) / (1 - var), self.alpha))

    def values(self, z: ArrayLike) -> CArray:
        return np.exp(-self._power(z))

    def log_abs(self, z: ArrayLike) -> FArray:
        return -self._power(z).real

    def log_derivative(self, z: ArrayLike) -> CArray:
        z = np.asarray(z, dtype=np.complex128)
        q = (1 + z) / (1 - z)
        return -self.alpha * q ** (self.alpha - 1) * 2 / (1 - z) ** 2
