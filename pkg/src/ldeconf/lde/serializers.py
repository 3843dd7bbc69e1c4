"""Serialisable descriptors of coefficients, equations and initial data.

An ODE file is a JSON object::

    {"order": 2,
     "coeffs": [{"kind": "example51", "alpha": 1.5}],
     "domain": "disc"}

``domain`` is ``"disc"``, ``"plane"``, a domain descriptor, or a map spec
(meaning the image T(D) of that map).
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Annotated, Any, Literal

import numpy as np
from numpy.typing import NDArray
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ldeconf.conformal.domains import Domain, DomainBase, UnitDisc
from ldeconf.core.types import ComplexValue
from ldeconf.jetcalc.jet import ComplexJet
from ldeconf.lde.equation import MAX_ORDER, LinearODE
from ldeconf.lde.examples import example51_coefficient, example51_disc_coefficient
from ldeconf.lde.functions import AnalyticFunction, constant_function

MAP_KINDS = {"mobius", "stolz_petal", "horodisc", "sector", "strip"}


def _horner_jet(coeffs: list[complex], var: ComplexJet) -> ComplexJet:
    total = ComplexJet.constant(coeffs[-1], var.center, var.order)
    for c in reversed(coeffs[:-1]):
        total = total * var + c
    return total


class CoefficientBase(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    def build(self, domain: DomainBase) -> AnalyticFunction:
        raise NotImplementedError


class ConstantCoefficient(CoefficientBase):
    """Constant coefficient."""

    kind: Literal["constant"] = "constant"
    value: ComplexValue = Field(..., description="Constant value")

    def build(self, domain: DomainBase) -> AnalyticFunction:
        function = constant_function(self.value, domain)
        function.descriptor = self
        return function


class PolynomialCoefficient(CoefficientBase):
    """Polynomial with coefficients in increasing powers of z."""

    kind: Literal["polynomial"] = "polynomial"
    coeffs: list[ComplexValue] = Field(..., min_length=1, description="c_0, c_1, ...")

    def build(self, domain: DomainBase) -> AnalyticFunction:
        coeffs = list(self.coeffs)
        descending = np.array(coeffs[::-1], dtype=np.complex128)
        return AnalyticFunction(
            lambda z, order: _horner_jet(coeffs, ComplexJet.variable(z, order)),
            domain,
            values_fn=lambda z: np.polyval(descending, z),
            descriptor=self,
            name=f"polynomial({coeffs})",
        )


class RationalCoefficient(CoefficientBase):
    """Quotient of polynomials; the denominator must not vanish on the domain."""

    kind: Literal["rational"] = "rational"
    numerator: list[ComplexValue] = Field(..., min_length=1, description="Increasing powers")
    denominator: list[ComplexValue] = Field(..., min_length=1, description="Increasing powers")

    @model_validator(mode="after")
    def _check(self) -> RationalCoefficient:
        if not any(self.denominator):
            raise ValueError("rational denominator must not be identically zero")
        return self

    def build(self, domain: DomainBase) -> AnalyticFunction:
        num = list(self.numerator)
        den = list(self.denominator)
        num_desc = np.array(num[::-1], dtype=np.complex128)
        den_desc = np.array(den[::-1], dtype=np.complex128)

        def jet_fn(z: complex, order: int) -> ComplexJet:
            var = ComplexJet.variable(z, order)
            return _horner_jet(num, var) / _horner_jet(den, var)

        return AnalyticFunction(
            jet_fn,
            domain,
            values_fn=lambda z: np.polyval(num_desc, z) / np.polyval(den_desc, z),
            descriptor=self,
            name=f"rational({num}/{den})",
        )


class Example51Coefficient(CoefficientBase):
    """(1 - alpha^2)/(4 w^2) - alpha^2 w^(2 alpha - 2) in w = (z - origin) e^{-i angle}."""

    kind: Literal["example51"] = "example51"
    alpha: float = Field(..., gt=0.0, description="Growth exponent")
    origin: ComplexValue = Field(default=0.0, description="Branch point")
    angle: float = Field(default=0.0, description="Direction away from the branch cut")

    def build(self, domain: DomainBase) -> AnalyticFunction:
        function = example51_coefficient(self.alpha, self.origin, self.angle, domain)
        function.descriptor = self
        return function


class Example51DiscCoefficient(CoefficientBase):
    """The disc form of the example51 family, analytic on the unit disc."""

    kind: Literal["example51_disc"] = "example51_disc"
    alpha: float = Field(..., gt=0.0, description="Growth exponent")

    def build(self, domain: DomainBase) -> AnalyticFunction:
        function = example51_disc_coefficient(self.alpha)
        function.domain = domain
        function.descriptor = self
        return function


CoefficientSpec = Annotated[
    ConstantCoefficient
    | PolynomialCoefficient
    | RationalCoefficient
    | Example51Coefficient
    | Example51DiscCoefficient,
    Field(discriminator="kind"),
]


def _normalize_domain(value: Any) -> Any:
    if isinstance(value, str):
        return {"kind": value}
    if isinstance(value, dict) and value.get("kind") in MAP_KINDS:
        return {"kind": "image", "map": value}
    return value


class ODESpec(BaseModel):
    """Serialisable normalized linear ODE."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    order: int = Field(..., ge=2, le=MAX_ORDER, description="Order k")
    coeffs: list[CoefficientSpec] = Field(..., description="a_0, ..., a_{k-2}")
    domain: Domain = Field(default_factory=UnitDisc, description="Domain of the coefficients")

    @field_validator("domain", mode="before")
    @classmethod
    def _domain(cls, value: Any) -> Any:
        return _normalize_domain(value)

    @model_validator(mode="after")
    def _check(self) -> ODESpec:
        if len(self.coeffs) != self.order - 1:
            raise ValueError(f"order {self.order} needs {self.order - 1} coefficients")
        return self

    def build(self) -> LinearODE:
        coeffs = tuple(spec.build(self.domain) for spec in self.coeffs)
        return LinearODE(self.order, coeffs, self.domain, descriptor=self)


class InitialConditions(BaseModel):
    """Initial data of one or more solutions at a common point.

    ``solutions[i]`` holds ``g_i(z0), g_i'(z0), ..., g_i^(k-1)(z0)``.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    z0: ComplexValue = Field(default=0.0, description="Initial point")
    solutions: list[list[ComplexValue]] = Field(..., min_length=1, description="Per-solution data")

    @model_validator(mode="after")
    def _check(self) -> InitialConditions:
        lengths = {len(row) for row in self.solutions}
        if len(lengths) != 1:
            raise ValueError("every solution needs the same number of initial values")
        return self

    @property
    def order(self) -> int:
        return len(self.solutions[0])

    def matrix(self) -> NDArray[np.complex128]:
        """``(k, n)`` array; column i holds the data of solution i."""
        return np.array(self.solutions, dtype=np.complex128).T

    @classmethod
    def identity(cls, k: int, z0: complex = 0.0) -> InitialConditions:
        rows = np.eye(k).tolist()
        return cls(z0=z0, solutions=rows)


class ODESerializer:
    """Read and write ODE and initial-condition files."""

    @staticmethod
    def serialize_ode(spec: ODESpec) -> dict[str, Any]:
        return spec.model_dump(mode="json")

    @staticmethod
    def deserialize_ode(data: dict[str, Any]) -> ODESpec:
        return ODESpec.model_validate(data)

    @staticmethod
    def save_to_file(spec: BaseModel, file_path: str | Path) -> None:
        path = Path(file_path)
        path.parent.mkdir(parents=True, exist_ok=True)
        with path.open("w", encoding="utf-8") as f:
            json.dump(spec.model_dump(mode="json"), f, indent=2)

    @staticmethod
    def _read(file_path: str | Path) -> dict[str, Any]:
        path = Path(file_path)
        if not path.exists():
            raise FileNotFoundError(f"File not found: {path}")
        try:
            with path.open("r", encoding="utf-8") as f:
                data = json.load(f)
        except json.JSONDecodeError as e:
            raise ValueError(
                f"Invalid JSON format in {path}: {e.msg} at line {e.lineno}, column {e.colno}"
            ) from e
        if not isinstance(data, dict):
            kind = type(data).__name__
            raise ValueError(f"Invalid format in {path}: expected object, got {kind}")
        return data

    @classmethod
    def load_ode(cls, file_path: str | Path) -> ODESpec:
        """
        Load an ODE spec from a JSON file.

        Raises:
            FileNotFoundError: If file does not exist
            ValueError: If file contains invalid JSON
            pydantic.ValidationError: If the schema is violated
        """
        return cls.deserialize_ode(cls._read(file_path))

    @classmethod
    def load_ics(cls, file_path: str | Path) -> InitialConditions:
        return InitialConditions.model_validate(cls._read(file_path))
