"""Domain descriptors for coefficients and solutions.

A domain answers three questions the solver needs: whether a point is
inside, a lower bound for its distance to the boundary, and a polyline
inside the domain joining two points.
"""

from __future__ import annotations

import cmath
import math
from abc import ABC, abstractmethod
from typing import Annotated, Any, Literal

import numpy as np
from numpy.typing import NDArray
from pydantic import BaseModel, ConfigDict, Field, TypeAdapter

from ldeconf.conformal.exceptions import OutsideImageError
from ldeconf.conformal.maps import ConformalMapSpec, koebe_distance, map_inverse
from ldeconf.core.types import ComplexValue

# Largest parameter increment of a sampled image path, and the fraction of
# the remaining distance to the unit circle covered per sample.
PATH_MAX_INCREMENT = 0.05
PATH_BOUNDARY_FRACTION = 0.2
PATH_MAX_POINTS = 20000


class DomainBase(BaseModel, ABC):
    """Common interface of domain descriptors."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    kind: str

    @abstractmethod
    def contains(self, w: complex) -> bool: ...

    @abstractmethod
    def boundary_distance(self, w: complex) -> float:
        """Lower bound for the distance of w to the boundary (inf if unbounded)."""

    def path(self, start: complex, end: complex) -> NDArray[np.complex128]:
        """Polyline from start to end; straight for convex domains."""
        return np.array([start, end], dtype=np.complex128)


class UnitDisc(DomainBase):
    kind: Literal["disc"] = "disc"

    def contains(self, w: complex) -> bool:
        return abs(w) < 1.0

    def boundary_distance(self, w: complex) -> float:
        return max(1.0 - abs(w), 0.0)


class HalfPlane(DomainBase):
    """``{w : Re((w - origin) e^{-i angle}) > 0}``."""

    kind: Literal["halfplane"] = "halfplane"
    origin: ComplexValue = Field(default=0.0, description="Point on the boundary line")
    angle: float = Field(default=0.0, description="Direction of the inward normal")

    def local(self, w: complex) -> complex:
        """Coordinate in which the domain is the right half-plane."""
        return (complex(w) - self.origin) * cmath.exp(-1j * self.angle)

    def contains(self, w: complex) -> bool:
        return self.local(w).real > 0.0

    def boundary_distance(self, w: complex) -> float:
        return max(self.local(w).real, 0.0)


class ComplexPlane(DomainBase):
    kind: Literal["plane"] = "plane"

    def contains(self, w: complex) -> bool:
        return math.isfinite(abs(w))

    def boundary_distance(self, w: complex) -> float:
        return math.inf


class MapImage(DomainBase):
    """Image T(D) of a catalog map."""

    kind: Literal["image"] = "image"
    map: ConformalMapSpec

    def contains(self, w: complex) -> bool:
        try:
            map_inverse(self.map, w)
        except OutsideImageError:
            return False
        return True

    def boundary_distance(self, w: complex) -> float:
        try:
            return koebe_distance(self.map, w)
        except OutsideImageError:
            return 0.0

    def path(self, start: complex, end: complex) -> NDArray[np.complex128]:
        """Image of the disc segment between the preimages.

        Samples get denser as the segment approaches the unit circle so that
        consecutive chords stay inside the image.
        """
        p0 = map_inverse(self.map, start)
        p1 = map_inverse(self.map, end)
        length = abs(p1 - p0)
        if length == 0:
            return np.array([start, end], dtype=np.complex128)
        params = [0.0]
        s = 0.0
        while s < 1.0 and len(params) < PATH_MAX_POINTS:
            gap = 1.0 - abs(p0 + s * (p1 - p0))
            step = min(PATH_BOUNDARY_FRACTION * gap, PATH_MAX_INCREMENT) / length
            s = min(1.0, s + max(step, 1e-12))
            params.append(s)
        points = self.map.eval_array(p0 + np.asarray(params) * (p1 - p0))
        points[0] = start
        points[-1] = end
        return points


Domain = Annotated[
    UnitDisc | HalfPlane | ComplexPlane | MapImage,
    Field(discriminator="kind"),
]

_DOMAIN_ADAPTER: TypeAdapter[Any] = TypeAdapter(Domain)


def parse_domain(data: dict[str, Any] | str) -> DomainBase:
    """Validate a domain descriptor.

    A string is either a JSON object or a bare kind such as ``"disc"`` or
    ``"halfplane"``, which takes the defaults of that kind.
    """
    if isinstance(data, str):
        text = data.strip()
        if text.startswith("{"):
            return _DOMAIN_ADAPTER.validate_json(text)  # type: ignore[no-any-return]
        data = {"kind": text}
    return _DOMAIN_ADAPTER.validate_python(data)  # type: ignore[no-any-return]
