"""Tests for the closed-form coefficient and solution families."""

import cmath
import math

import numpy as np
import pytest

from ldeconf.conformal.domains import ComplexPlane, HalfPlane, MapImage, UnitDisc
from ldeconf.conformal.maps import HorodiscMap, MobiusMap, SectorMap, StolzPetalMap, StripMap
from ldeconf.lde.equation import LinearODE, max_residual
from ldeconf.lde.examples import (
    Example51DiscSolution,
    Example51Solution,
    ExponentialSum,
    InnerFunctionProbe,
    characteristic_roots,
    constant_ode,
    example51_basis_for_map,
    example51_coefficient,
    example51_disc_coefficient,
    example51_ode_for_map,
    exponential_basis,
    lattice_zeros_example51,
    ode_from_roots,
)
from ldeconf.lde.exceptions import DegenerateBasisError, LDEError

pytestmark = pytest.mark.unit

ALPHA = 1.5
HALF_PLANE_POINTS = [1.0, 0.5 + 0.5j, 2.0 - 1.0j, 0.1 + 3.0j]
DISC_POINTS = [0.0, 0.5, -0.6 + 0.2j, 0.3 - 0.7j]


def jet_log_derivative(g, z):
    coeffs = g.jet_at(z, 1).coeffs
    return coeffs[1] / coeffs[0]


class TestHalfPlaneFamily:
    """Tests for the half-plane coefficient and its zero-free solutions."""

    @pytest.fixture
    def ode(self):
        return LinearODE(2, (example51_coefficient(ALPHA),), HalfPlane())

    @pytest.mark.parametrize("sign", [1, -1])
    def test_solutions(self, ode, sign):
        """w^{(1-alpha)/2} exp(+-w^alpha) solve f'' + a f = 0."""
        assert max_residual(ode, [Example51Solution(ALPHA, sign)], HALF_PLANE_POINTS) < 1e-9

    def test_vectorised_coefficient(self, ode):
        """Vectorised values agree with the jets."""
        a = ode.coeffs[0]
        points = np.array(HALF_PLANE_POINTS)

        expected = [a.jet_at(w, 0).value for w in HALF_PLANE_POINTS]
        np.testing.assert_allclose(a.values(points), expected, rtol=1e-12)

    def test_log_derivative(self):
        """The closed-form log-derivative matches the jet ratio."""
        f = Example51Solution(ALPHA, weights=(1.0, -2.0))

        for w in HALF_PLANE_POINTS:
            closed = f.log_derivative(np.array([w]))[0]
            assert closed == pytest.approx(jet_log_derivative(f, w), rel=1e-10)

    def test_log_abs(self):
        """log|f| agrees with the values where they do not overflow."""
        f = Example51Solution(ALPHA, weights=(1.0, 1.0))
        points = np.array(HALF_PLANE_POINTS)

        np.testing.assert_allclose(f.log_abs(points), np.log(np.abs(f.values(points))), atol=1e-12)

    def test_addition_merges_weights(self):
        """f_1 + f_2 stays in the family."""
        total = Example51Solution(ALPHA, 1) + Example51Solution(ALPHA, -1)

        assert isinstance(total, Example51Solution)
        assert total.weights == (1.0, 1.0)

    def test_zero_weights(self):
        """At least one weight must be nonzero."""
        with pytest.raises(LDEError):
            Example51Solution(ALPHA, weights=(0.0, 0.0))

    def test_rotated_family(self):
        """A shifted and rotated copy solves its own equation."""
        origin, angle = -1.0 + 0.5j, 0.7
        domain = HalfPlane(origin=origin, angle=angle)
        ode = LinearODE(2, (example51_coefficient(ALPHA, origin, angle),), domain)
        points = [origin + cmath.exp(1j * angle) * w for w in HALF_PLANE_POINTS]

        basis = [Example51Solution(ALPHA, s, origin, angle) for s in (1, -1)]

        assert max_residual(ode, basis, points) < 1e-9


class TestDiscFamily:
    """Tests for the disc coefficient and its solutions."""

    @pytest.fixture
    def ode(self):
        return LinearODE(2, (example51_disc_coefficient(ALPHA),), UnitDisc())

    @pytest.mark.parametrize("weights", [(1.0, 0.0), (0.0, 1.0), (1.0, 1.0)])
    def test_solutions(self, ode, weights):
        """g_1, g_2 and their sum solve the disc equation."""
        g = Example51DiscSolution(ALPHA, weights)

        assert max_residual(ode, [g], DISC_POINTS) < 1e-9

    def test_coefficient_closed_form(self):
        """b(0) = (1 - alpha^2) - 4 alpha^2."""
        b = example51_disc_coefficient(ALPHA)

        assert b.value(0.0) == pytest.approx(1 - ALPHA**2 - 4 * ALPHA**2)

    def test_log_derivative(self):
        """The stable log-derivative matches the jet ratio."""
        g = Example51DiscSolution(ALPHA, (1.0, 1.0))

        for z in DISC_POINTS:
            closed = g.log_derivative(np.array([z]))[0]
            assert closed == pytest.approx(jet_log_derivative(g, z), rel=1e-10)

    def test_log_abs_near_boundary(self):
        """log|g| stays finite where the values overflow."""
        g = Example51DiscSolution(ALPHA, (1.0, 1.0))

        value = g.log_abs(np.array([1 - 1e-6]))[0]

        assert math.isfinite(value)
        assert value > 700

    def test_addition(self):
        """g_1 + g_2 merges weights."""
        total = Example51DiscSolution(ALPHA, (1.0, 0.0)) + Example51DiscSolution(ALPHA, (0.0, 1.0))

        assert isinstance(total, Example51DiscSolution)
        assert total.weights == (1.0, 1.0)


class TestLatticeZeros:
    """Tests for the closed-form zeros of g_1 + g_2."""

    def test_counts(self):
        """Two zeros below 0.65, four below 0.75."""
        assert len(lattice_zeros_example51(ALPHA, 0.65)) == 2
        assert len(lattice_zeros_example51(ALPHA, 0.75)) == 4

    def test_first_modulus(self):
        """The first pair sits at |z| = 0.594."""
        zeros = lattice_zeros_example51(ALPHA, 0.65)

        assert abs(zeros[0]) == pytest.approx(0.594, abs=1e-3)
        assert zeros[0] == pytest.approx(zeros[1].conjugate())

    def test_zeros_vanish(self):
        """The sum vanishes at every listed zero."""
        g = Example51DiscSolution(ALPHA, (1.0, 1.0))

        zeros = lattice_zeros_example51(ALPHA, 0.9)

        assert len(zeros) > 4
        assert np.max(np.abs(g.values(np.array(zeros)))) < 1e-10

    @pytest.mark.parametrize("alpha", [0.5, 1.0])
    def test_no_zeros_for_small_alpha(self, alpha):
        """There are no zeros for alpha <= 1."""
        assert lattice_zeros_example51(alpha, 0.99) == []


class TestFamilyOnCatalogImages:
    """The half-plane family placed around each catalog image."""

    @pytest.mark.parametrize(
        "T",
        [
            SectorMap(alpha=1.5, phi=0.3),
            StolzPetalMap(alpha=0.5, zeta=1j),
            StripMap(alpha=1.0, phi=0.2),
            HorodiscMap(zeta=0.5),
            MobiusMap(a=1.0, b=0.3, c=0.2j, d=1.0),
            MobiusMap(a=1.0, b=1.0, c=-1.0, d=1.0),
        ],
        ids=lambda T: T.kind,
    )
    def test_basis_solves_equation(self, T):
        """The placed solutions solve the placed equation on T(D)."""
        domain = MapImage(map=T)
        ode = example51_ode_for_map(ALPHA, T, domain)
        basis = example51_basis_for_map(ALPHA, T, domain)
        points = [complex(T.eval_array(z)) for z in (0.0, 0.5, -0.3 + 0.4j, 0.6j)]

        assert ode.domain == domain
        assert max_residual(ode, basis, points) < 1e-9


class TestConstantCoefficients:
    """Tests for constant-coefficient equations and exponential sums."""

    def test_characteristic_roots(self):
        """x^2 + 1 has roots +-i."""
        roots = sorted(characteristic_roots([1.0]), key=lambda r: r.imag)

        assert roots == pytest.approx([-1j, 1j])

    def test_ode_from_roots(self):
        """Roots +-i give f'' + f = 0."""
        ode = ode_from_roots([1j, -1j])

        assert ode.order == 2
        assert ode.coeffs[0].value(0.0) == pytest.approx(1.0)

    def test_roots_must_sum_to_zero(self):
        """Normalized equations have roots summing to zero."""
        with pytest.raises(LDEError):
            ode_from_roots([1.0, 2.0])

    def test_exponential_basis(self):
        """The basis solves the equation."""
        ode = ode_from_roots([2.0, -1 + 0.3j, -1 - 0.3j])

        basis = exponential_basis(ode)

        assert len(basis) == 3
        assert max_residual(ode, basis, [0.0, 1 + 1j, -2.0]) < 1e-10

    def test_repeated_root(self):
        """A double root has no exponential basis."""
        with pytest.raises(DegenerateBasisError):
            exponential_basis(constant_ode([0.0]))

    def test_no_overflow(self):
        """Log-derivative and log|f| stay finite far out."""
        f = ExponentialSum([1.0, -1.0])
        w = np.array([800.0])

        assert f.log_derivative(w)[0] == pytest.approx(1.0)
        assert f.log_abs(w)[0] == pytest.approx(800.0)

    def test_sum_concatenates(self):
        """Adding exponential sums concatenates the terms."""
        total = ExponentialSum([1.0]) + ExponentialSum([-1.0], [2.0])

        assert isinstance(total, ExponentialSum)
        assert total.value(0.0) == pytest.approx(3.0)

    def test_mismatched_weights(self):
        """Roots and weights must match."""
        with pytest.raises(LDEError):
            ExponentialSum([1.0, 2.0], [1.0])

    def test_default_domain(self):
        """Exponential sums are entire."""
        assert ExponentialSum([1.0]).domain == ComplexPlane()


class TestInnerFunctionProbe:
    """Tests for exp(-q^alpha)."""

    def test_values(self):
        """On the real axis the probe is exp(-((1+x)/(1-x))^alpha)."""
        probe = InnerFunctionProbe(1.0)

        assert probe.values(np.array([0.5]))[0] == pytest.approx(math.exp(-3.0))
        assert probe.log_abs(np.array([0.5]))[0] == pytest.approx(-3.0)

    def test_bounded_by_one(self):
        """|exp(-q)| <= 1 on the disc for alpha = 1."""
        probe = InnerFunctionProbe(1.0)
        points = 0.95 * np.exp(1j * np.linspace(0, 2 * np.pi, 50))

        assert np.all(probe.log_abs(points) <= 1e-12)

    def test_log_derivative(self):
        """The closed-form log-derivative matches the jet ratio."""
        probe = InnerFunctionProbe(1.5)
        z = 0.2 + 0.4j

        assert probe.log_derivative(np.array([z]))[0] == pytest.approx(
            jet_log_derivative(probe, z), rel=1e-10
        )
