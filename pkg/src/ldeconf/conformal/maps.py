"""Catalog of conformal maps T from the unit disc onto model domains.

Every kind provides closed-form evaluation, derivative and inverse, an
analytic logarithm of ``T'`` on the whole disc, the closed form of
``|T'(T^{-1}(w))|`` and Taylor jets built from elementary-function jets.

Kinds:
    mobius:       (a z + b) / (c z + d), pole outside the open disc
    stolz_petal:  zeta (1 - (1 - z conj(zeta))^alpha), petal with corner at zeta
    horodisc:     zeta + (1 - |zeta|) z, disc internally tangent at zeta / |zeta|
    sector:       e^{i phi} ((1 + z) / (1 - z))^alpha, opening alpha pi
    strip:        alpha e^{i phi} log((1 + z) / (1 - z)), width alpha pi
"""

from __future__ import annotations

import cmath
import math
from abc import ABC, abstractmethod
from typing import Annotated, Any, Literal

import numpy as np
from numpy.typing import ArrayLike, NDArray
from pydantic import BaseModel, ConfigDict, Field, TypeAdapter, model_validator

from ldeconf.conformal.exceptions import OutsideDiscError, OutsideImageError
from ldeconf.core.types import ComplexValue
from ldeconf.jetcalc.jet import ComplexJet, jet_log, jet_pow

CArray = NDArray[np.complex128]

# Tolerance for |zeta| = 1 on petal maps.
UNIMODULAR_TOLERANCE = 1e-12


def _as_array(z: ArrayLike) -> CArray:
    return np.asarray(z, dtype=np.complex128)


class ConformalMapBase(BaseModel, ABC):
    """Common interface of the catalog kinds."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    kind: str

    @abstractmethod
    def eval_array(self, z: ArrayLike) -> CArray:
        """T(z), vectorised."""

    @abstractmethod
    def derivative_array(self, z: ArrayLike) -> CArray:
        """T'(z), vectorised."""

    @abstractmethod
    def log_derivative_array(self, z: ArrayLike) -> CArray:
        """A branch of log T'(z) analytic on the whole disc."""

    @abstractmethod
    def pre_schwarzian_array(self, z: ArrayLike) -> CArray:
        """T''(z) / T'(z), vectorised."""

    @abstractmethod
    def jet(self, z: complex, order: int) -> ComplexJet:
        """Taylor jet of T at z."""

    @abstractmethod
    def raw_inverse(self, w: complex) -> complex:
        """Closed-form preimage; raises OutsideImageError on branch violation."""

    @abstractmethod
    def image_derivative(self, w: complex) -> float:
        """Closed form of |T'(T^{-1}(w))| for w in the image."""

    def describe(self) -> str:
        params = ", ".join(
            f"{key}={value}" for key, value in self.model_dump().items() if key != "kind"
        )
        return f"{self.kind}({params})"


class MobiusMap(ConformalMapBase):
    """Linear fractional map with its pole outside the open disc."""

    kind: Literal["mobius"] = "mobius"
    a: ComplexValue = Field(default=1.0, description="Numerator coefficient of z")
    b: ComplexValue = Field(default=0.0, description="Numerator constant")
    c: ComplexValue = Field(default=0.0, description="Denominator coefficient of z")
    d: ComplexValue = Field(default=1.0, description="Denominator constant")

    @model_validator(mode="after")
    def _check(self) -> MobiusMap:
        if self.a * self.d - self.b * self.c == 0:
            raise ValueError("mobius map needs a*d - b*c != 0")
        if self.d == 0 or abs(self.c) > abs(self.d):
            raise ValueError("mobius map must be analytic in the disc (|c| <= |d|, d != 0)")
        return self

    @property
    def determinant(self) -> complex:
        return self.a * self.d - self.b * self.c

    def eval_array(self, z: ArrayLike) -> CArray:
        z = _as_array(z)
        return (self.a * z + self.b) / (self.c * z + self.d)

    def derivative_array(self, z: ArrayLike) -> CArray:
        z = _as_array(z)
        return self.determinant / (self.c * z + self.d) ** 2

    def log_derivative_array(self, z: ArrayLike) -> CArray:
        # c z + d = d (1 + (c/d) z) and Re(1 + (c/d) z) > 0 on the disc
        z = _as_array(z)
        return (
            cmath.log(self.determinant)
            - 2 * cmath.log(self.d)
            - 2 * np.log(1 + (self.c / self.d) * z)
        )

    def pre_schwarzian_array(self, z: ArrayLike) -> CArray:
        z = _as_array(z)
        return -2 * self.c / (self.c * z + self.d)

    def jet(self, z: complex, order: int) -> ComplexJet:
        var = ComplexJet.variable(z, order)
        return (self.a * var + self.b) / (self.c * var + self.d)

    def raw_inverse(self, w: complex) -> complex:
        denominator = self.a - self.c * w
        if denominator == 0:
            raise OutsideImageError(w, self.kind, "image of the point at infinity")
        return (self.d * w - self.b) / denominator

    def image_derivative(self, w: complex) -> float:
        return abs(self.a - self.c * w) ** 2 / abs(self.determinant)


class StolzPetalMap(ConformalMapBase):
    """Petal with a corner of opening alpha*pi at the boundary point zeta."""

    kind: Literal["stolz_petal"] = "stolz_petal"
    alpha: float = Field(..., gt=0.0, lt=1.0, description="Opening exponent in (0, 1)")
    zeta: ComplexValue = Field(default=1.0, description="Unimodular corner point")

    @model_validator(mode="after")
    def _check(self) -> StolzPetalMap:
        if abs(abs(self.zeta) - 1.0) > UNIMODULAR_TOLERANCE:
            raise ValueError("stolz_petal zeta must be unimodular")
        return self

    def _base(self, z: CArray) -> CArray:
        return 1 - z * self.zeta.conjugate()

    def eval_array(self, z: ArrayLike) -> CArray:
        return self.zeta * (1 - self._base(_as_array(z)) ** self.alpha)

    def derivative_array(self, z: ArrayLike) -> CArray:
        return self.alpha * self._base(_as_array(z)) ** (self.alpha - 1)

    def log_derivative_array(self, z: ArrayLike) -> CArray:
        return math.log(self.alpha) + (self.alpha - 1) * np.log(self._base(_as_array(z)))

    def pre_schwarzian_array(self, z: ArrayLike) -> CArray:
        return -(self.alpha - 1) * self.zeta.conjugate() / self._base(_as_array(z))

    def jet(self, z: complex, order: int) -> ComplexJet:
        var = ComplexJet.variable(z, order)
        return self.zeta * (1 - jet_pow(1 - self.zeta.conjugate() * var, self.alpha))

    def raw_inverse(self, w: complex) -> complex:
        v = 1 - w * self.zeta.conjugate()
        if v == 0 or abs(cmath.phase(v)) >= self.alpha * math.pi / 2:
            raise OutsideImageError(w, self.kind, "outside the petal opening")
        return self.zeta * (1 - v ** (1 / self.alpha))

    def image_derivative(self, w: complex) -> float:
        return self.alpha * abs(self.zeta - w) ** (1 - 1 / self.alpha)


class HorodiscMap(ConformalMapBase):
    """Disc of radius 1 - |zeta| centred at zeta, tangent to the unit circle."""

    kind: Literal["horodisc"] = "horodisc"
    zeta: ComplexValue = Field(..., description="Center, 0 < |zeta| < 1")

    @model_validator(mode="after")
    def _check(self) -> HorodiscMap:
        if not 0.0 < abs(self.zeta) < 1.0:
            raise ValueError("horodisc zeta must satisfy 0 < |zeta| < 1")
        return self

    @property
    def radius(self) -> float:
        return 1.0 - abs(self.zeta)

    def eval_array(self, z: ArrayLike) -> CArray:
        return self.zeta + self.radius * _as_array(z)

    def derivative_array(self, z: ArrayLike) -> CArray:
        return np.full_like(_as_array(z), self.radius)

    def log_derivative_array(self, z: ArrayLike) -> CArray:
        return np.full_like(_as_array(z), math.log(self.radius))

    def pre_schwarzian_array(self, z: ArrayLike) -> CArray:
        return np.zeros_like(_as_array(z))

    def jet(self, z: complex, order: int) -> ComplexJet:
        return self.zeta + self.radius * ComplexJet.variable(z, order)

    def raw_inverse(self, w: complex) -> complex:
        return (w - self.zeta) / self.radius

    def image_derivative(self, w: complex) -> float:
        return self.radius


class SectorMap(ConformalMapBase):
    """Sector of opening alpha*pi about the direction phi."""

    kind: Literal["sector"] = "sector"
    alpha: float = Field(..., gt=0.0, lt=2.0, description="Opening exponent in (0, 2)")
    phi: float = Field(default=0.0, description="Rotation in radians")

    @property
    def rotation(self) -> complex:
        return cmath.exp(1j * self.phi)

    def eval_array(self, z: ArrayLike) -> CArray:
        z = _as_array(z)
        return self.rotation * ((1 + z) / (1 - z)) ** self.alpha

    def derivative_array(self, z: ArrayLike) -> CArray:
        z = _as_array(z)
        ratio = (1 + z) / (1 - z)
        return self.rotation * 2 * self.alpha * ratio ** (self.alpha - 1) / (1 - z) ** 2

    def log_derivative_array(self, z: ArrayLike) -> CArray:
        z = _as_array(z)
        return (
            1j * self.phi
            + math.log(2 * self.alpha)
            + (self.alpha - 1) * np.log(1 + z)
            - (self.alpha + 1) * np.log(1 - z)
        )

    def pre_schwarzian_array(self, z: ArrayLike) -> CArray:
        z = _as_array(z)
        return (self.alpha - 1) / (1 + z) + (self.alpha + 1) / (1 - z)

    def jet(self, z: complex, order: int) -> ComplexJet:
        var = ComplexJet.variable(z, order)
        return self.rotation * jet_pow((1 + var) / (1 - var), self.alpha)

    def raw_inverse(self, w: complex) -> complex:
        v = w / self.rotation
        if v == 0 or abs(cmath.phase(v)) >= self.alpha * math.pi / 2:
            raise OutsideImageError(w, self.kind, "outside the sector opening")
        u = v ** (1 / self.alpha)
        return (u - 1) / (u + 1)

    def image_derivative(self, w: complex) -> float:
        v = w / self.rotation
        u = v ** (1 / self.alpha)
        return self.alpha / 2 * abs(w) ** (1 - 1 / self.alpha) * abs(u + 1) ** 2


class StripMap(ConformalMapBase):
    """Strip of width alpha*pi about the line through 0 in direction phi."""

    kind: Literal["strip"] = "strip"
    alpha: float = Field(..., gt=0.0, description="Width parameter, width = alpha * pi")
    phi: float = Field(default=0.0, description="Rotation in radians")

    @property
    def rotation(self) -> complex:
        return cmath.exp(1j * self.phi)

    def eval_array(self, z: ArrayLike) -> CArray:
        z = _as_array(z)
        return self.alpha * self.rotation * np.log((1 + z) / (1 - z))

    def derivative_array(self, z: ArrayLike) -> CArray:
        z = _as_array(z)
        return 2 * self.alpha * self.rotation / (1 - z * z)

    def log_derivative_array(self, z: ArrayLike) -> CArray:
        z = _as_array(z)
        return math.log(2 * self.alpha) + 1j * self.phi - np.log(1 + z) - np.log(1 - z)

    def pre_schwarzian_array(self, z: ArrayLike) -> CArray:
        z = _as_array(z)
        return 2 * z / (1 - z * z)

    def jet(self, z: complex, order: int) -> ComplexJet:
        var = ComplexJet.variable(z, order)
        return self.alpha * self.rotation * jet_log((1 + var) / (1 - var))

    def raw_inverse(self, w: complex) -> complex:
        v = w / (self.alpha * self.rotation)
        if abs(v.imag) >= math.pi / 2:
            raise OutsideImageError(w, self.kind, "outside the strip")
        return cmath.tanh(v / 2)

    def image_derivative(self, w: complex) -> float:
        v = w / (self.alpha * self.rotation)
        return 2 * self.alpha * abs(cmath.cosh(v / 2)) ** 2


ConformalMapSpec = Annotated[
    MobiusMap | StolzPetalMap | HorodiscMap | SectorMap | StripMap,
    Field(discriminator="kind"),
]

_SPEC_ADAPTER: TypeAdapter[Any] = TypeAdapter(ConformalMapSpec)


def parse_map_spec(data: dict[str, Any] | str) -> ConformalMapBase:
    """Validate a map spec from a dict or JSON string.

    Raises:
        pydantic.ValidationError: Unknown kind or parameters out of range
    """
    if isinstance(data, str):
        return _SPEC_ADAPTER.validate_json(data)  # type: ignore[no-any-return]
    return _SPEC_ADAPTER.validate_python(data)  # type: ignore[no-any-return]


def identity_map() -> MobiusMap:
    return MobiusMap(a=1.0, b=0.0, c=0.0, d=1.0)


def _check_disc(T: ConformalMapBase, z: complex) -> complex:
    z = complex(z)
    if not abs(z) < 1.0:
        raise OutsideDiscError(z, T.kind)
    return z


def map_eval(T: ConformalMapBase, z: complex) -> complex:
    """T(z) for z in the open unit disc.

    Raises:
        OutsideDiscError: |z| >= 1
    """
    z = _check_disc(T, z)
    return complex(T.eval_array(z))


def map_eval_array(T: ConformalMapBase, z: ArrayLike) -> CArray:
    """Vectorised T(z); no disc check."""
    return T.eval_array(z)


def derivative_array(T: ConformalMapBase, z: ArrayLike) -> CArray:
    """Vectorised T'(z); no disc check."""
    return T.derivative_array(z)


def map_jet(T: ConformalMapBase, z: complex, order: int) -> ComplexJet:
    """Taylor jet of T at z of the given order.

    Raises:
        OutsideDiscError: |z| >= 1
    """
    z = _check_disc(T, z)
    return T.jet(z, order)


def map_inverse(T: ConformalMapBase, w: complex) -> complex:
    """The unique z in the disc with T(z) = w.

    Raises:
        OutsideImageError: w is not in T(D)
    """
    w = complex(w)
    z = T.raw_inverse(w)
    if not abs(z) < 1.0 or not math.isfinite(abs(z)):
        raise OutsideImageError(w, T.kind, "preimage outside the unit disc")
    return z


def contains(T: ConformalMapBase, w: complex, r: float = 1.0) -> bool:
    """Whether w lies in T(D(0, r))."""
    try:
        return abs(map_inverse(T, w)) < r
    except OutsideImageError:
        return False


def deriv_at_image(T: ConformalMapBase, w: complex) -> float:
    """|T'(T^{-1}(w))| from the closed form of the kind.

    Raises:
        OutsideImageError: w is not in T(D)
    """
    map_inverse(T, w)
    return T.image_derivative(complex(w))


def schwarzian(T: ConformalMapBase, z: complex) -> complex:
    """Schwarzian derivative (T''/T')' - (T''/T')^2 / 2 at z."""
    c = map_jet(T, z, 3).coeffs
    return complex(6 * c[3] / c[1] - 6 * c[2] ** 2 / c[1] ** 2)


def log_derivative_branch(T: ConformalMapBase, z: complex) -> complex:
    """log T'(z) continued analytically from the principal value at 0.

    Raises:
        OutsideDiscError: |z| >= 1
    """
    z = _check_disc(T, z)
    values = T.log_derivative_array(np.array([0.0, z]))
    principal_at_origin = cmath.log(complex(T.derivative_array(0.0)))
    turns = round((principal_at_origin - values[0]).imag / (2 * math.pi))
    return complex(values[1] + 2j * math.pi * turns)


def koebe_distance(T: ConformalMapBase, w: complex) -> float:
    """Lower bound |T'(z)| (1 - |z|^2) / 4 for the distance of w = T(z) to the boundary.

    Raises:
        OutsideImageError: w is not in T(D)
    """
    z = map_inverse(T, w)
    return abs(complex(T.derivative_array(z))) * (1 - abs(z) ** 2) / 4
