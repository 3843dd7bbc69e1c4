"""Tests for the polar quadrature of coefficient integrals."""

import math

import numpy as np
import pytest

from ldeconf.conformal.domains import ComplexPlane, UnitDisc
from ldeconf.conformal.maps import HorodiscMap, MobiusMap, SectorMap
from ldeconf.lde.functions import Evaluator, constant_function
from ldeconf.lde.serializers import PolynomialCoefficient
from ldeconf.oscillation.exceptions import OscillationError, QuadratureConvergenceError
from ldeconf.oscillation.quadrature import coefficient_integral, image_side_integral, refine
from ldeconf.utils.config_loader import QuadratureConfig

pytestmark = pytest.mark.unit


class GridSensitive(Evaluator):
    """Values equal to the number of angular nodes."""

    def __init__(self):
        super().__init__(UnitDisc())

    def jet_at(self, z, order):
        raise NotImplementedError

    def values(self, z):
        z = np.asarray(z)
        return np.full(z.shape, float(z.shape[-1]), dtype=complex)


class NanCoefficient(GridSensitive):
    def values(self, z):
        return np.full(np.shape(z), np.nan, dtype=complex)


class TestCoefficientIntegral:
    """Tests for coefficient_integral."""

    def test_constant_on_disc(self):
        """|1|^(1/2) integrates to the disc area."""
        value = coefficient_integral(constant_function(1.0, UnitDisc()), 0, 0.6, 2)

        assert value == pytest.approx(math.pi * 0.36, rel=1e-10)

    def test_constant_through_horodisc(self):
        """A horodisc halves lengths, so the integral is 0.5 pi r^2."""
        a = constant_function(1.0, ComplexPlane())

        value = coefficient_integral(a, 0, 0.8, 2, HorodiscMap(zeta=0.5))

        assert value == pytest.approx(0.5 * math.pi * 0.64, rel=1e-10)

    @pytest.mark.parametrize(
        "T",
        [SectorMap(alpha=1.5), MobiusMap(a=1.0, b=0.3, c=0.2j, d=1.0)],
        ids=lambda T: T.kind,
    )
    def test_image_side_agrees(self, T):
        """The image-side form equals the disc-side form."""
        a = PolynomialCoefficient(coeffs=[1.0, 0.5]).build(ComplexPlane())
        cfg = QuadratureConfig(radial_nodes=32, angular_nodes=64, max_refinements=3)

        disc = coefficient_integral(a, 1, 0.5, 3, T, cfg)
        image = image_side_integral(a, 1, 0.5, 3, T, cfg)

        assert image == pytest.approx(disc, rel=1e-8)

    def test_index_out_of_range(self):
        """j runs over 0 .. k - 2."""
        with pytest.raises(OscillationError):
            coefficient_integral(constant_function(1.0, UnitDisc()), 2, 0.5, 3)

    @pytest.mark.parametrize("r", [0.0, 1.0])
    def test_radius_out_of_range(self, r):
        """Radii must lie in (0, 1)."""
        with pytest.raises(OscillationError):
            coefficient_integral(constant_function(1.0, UnitDisc()), 0, r, 2)


class TestRefine:
    """Tests for grid refinement."""

    def test_no_convergence(self):
        """A grid-dependent integrand exhausts the refinements."""
        cfg = QuadratureConfig(radial_nodes=8, angular_nodes=16, max_refinements=2)

        with pytest.raises(QuadratureConvergenceError) as exc_info:
            coefficient_integral(GridSensitive(), 0, 0.5, 2, config=cfg)

        assert len(exc_info.value.last_values) == 2

    def test_not_finite(self):
        """NaN coefficients are rejected before refining."""
        with pytest.raises(OscillationError, match="not finite"):
            coefficient_integral(NanCoefficient(), 0, 0.5, 2)

    def test_without_refinement(self):
        """max_refinements = 0 returns the first estimate."""
        cfg = QuadratureConfig(radial_nodes=8, angular_nodes=16, max_refinements=0)

        value = refine(lambda z: np.full(z.shape, float(z.shape[-1])), 0.5, cfg)

        assert value == pytest.approx(16 * math.pi * 0.25)
