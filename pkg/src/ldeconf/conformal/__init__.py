"""Conformal maps of the unit disc and domain descriptors."""

from ldeconf.conformal.domains import (
    ComplexPlane,
    Domain,
    DomainBase,
    HalfPlane,
    MapImage,
    UnitDisc,
    parse_domain,
)
from ldeconf.conformal.exceptions import ConformalMapError, OutsideDiscError, OutsideImageError
from ldeconf.conformal.maps import (
    ConformalMapBase,
    ConformalMapSpec,
    HorodiscMap,
    MobiusMap,
    SectorMap,
    StolzPetalMap,
    StripMap,
    contains,
    deriv_at_image,
    derivative_array,
    identity_map,
    koebe_distance,
    log_derivative_branch,
    map_eval,
    map_eval_array,
    map_inverse,
    map_jet,
    parse_map_spec,
    schwarzian,
)

__all__ = [
    "ComplexPlane",
    "ConformalMapBase",
    "ConformalMapError",
    "ConformalMapSpec",
    "Domain",
    "DomainBase",
    "HalfPlane",
    "HorodiscMap",
    "MapImage",
    "MobiusMap",
    "OutsideDiscError",
    "OutsideImageError",
    "SectorMap",
    "StolzPetalMap",
    "StripMap",
    "UnitDisc",
    "contains",
    "deriv_at_image",
    "derivative_array",
    "identity_map",
    "koebe_distance",
    "log_derivative_branch",
    "map_eval",
    "map_eval_array",
    "map_inverse",
    "map_jet",
    "parse_domain",
    "parse_map_spec",
    "schwarzian",
]
