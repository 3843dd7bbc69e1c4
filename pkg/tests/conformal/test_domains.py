"""Tests for domain descriptors."""

import math

import numpy as np
import pytest
from pydantic import ValidationError

from ldeconf.conformal.domains import ComplexPlane, HalfPlane, MapImage, UnitDisc, parse_domain
from ldeconf.conformal.maps import SectorMap, StripMap

pytestmark = pytest.mark.unit


class TestBasicDomains:
    """Tests for disc, half-plane and plane."""

    def test_unit_disc(self):
        disc = UnitDisc()
        assert disc.contains(0.5j)
        assert not disc.contains(1.0)
        assert disc.boundary_distance(0.25) == pytest.approx(0.75)

    def test_half_plane_with_origin_and_angle(self):
        """Re((w - origin) e^{-i angle}) > 0 defines the half-plane."""
        right = HalfPlane(origin=1.0)
        upper = HalfPlane(angle=math.pi / 2)

        assert right.contains(1.5)
        assert not right.contains(0.5)
        assert right.boundary_distance(3.0) == pytest.approx(2.0)
        assert upper.contains(1j)
        assert not upper.contains(-1j)
        assert upper.local(2j) == pytest.approx(2.0)

    def test_plane(self):
        plane = ComplexPlane()
        assert plane.contains(1e6j)
        assert plane.boundary_distance(0) == math.inf

    def test_straight_path(self):
        """Convex domains use the straight segment."""
        path = HalfPlane().path(1.0, 2.0 + 1j)
        np.testing.assert_allclose(path, [1.0, 2.0 + 1j])


class TestMapImage:
    """Tests for images of catalog maps."""

    def test_contains(self):
        image = MapImage(map=SectorMap(alpha=1.0))
        assert image.contains(2.0)
        assert not image.contains(-2.0)
        assert image.boundary_distance(-2.0) == 0.0
        assert 0 < image.boundary_distance(1.0) <= 1.0

    def test_path_stays_inside(self):
        """Image paths start and end at the given points and stay inside."""
        image = MapImage(map=StripMap(alpha=1.0))
        path = image.path(0.0, 3.0 + 1j)

        assert path[0] == 0.0
        assert path[-1] == 3.0 + 1j
        assert len(path) > 2
        assert all(image.contains(w) for w in path)

    def test_degenerate_path(self):
        image = MapImage(map=SectorMap(alpha=1.0))
        assert len(image.path(1.0, 1.0)) == 2


class TestParseDomain:
    """Tests for domain parsing."""

    def test_shorthands(self):
        assert isinstance(parse_domain("disc"), UnitDisc)
        assert isinstance(parse_domain("plane"), ComplexPlane)

    def test_bare_kind(self):
        """Any kind name alone selects that domain with its defaults."""
        half = parse_domain("halfplane")

        assert isinstance(half, HalfPlane)
        assert half.origin == 0
        assert half.angle == 0.0
        assert isinstance(parse_domain(" disc "), UnitDisc)

    def test_bare_kind_needs_required_fields(self):
        """Kinds with required fields cannot be given by name alone."""
        with pytest.raises(ValidationError):
            parse_domain("image")
        with pytest.raises(ValidationError):
            parse_domain("annulus")

    def test_dict_and_json(self):
        half = parse_domain({"kind": "halfplane", "origin": 1, "angle": 0.5})
        image = parse_domain('{"kind": "image", "map": {"kind": "sector", "alpha": 1.5}}')

        assert isinstance(half, HalfPlane)
        assert half.origin == 1
        assert isinstance(image, MapImage)
        assert isinstance(image.map, SectorMap)

    def test_invalid(self):
        with pytest.raises(ValidationError):
            parse_domain({"kind": "annulus"})
