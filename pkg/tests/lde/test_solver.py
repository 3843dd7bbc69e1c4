"""Tests for the ODE container and the Taylor continuation solver."""

import cmath
import math

import numpy as np
import pytest

from ldeconf.conformal.domains import ComplexPlane, UnitDisc
from ldeconf.lde.equation import LinearODE, max_residual, residual
from ldeconf.lde.examples import ExponentialSum, constant_ode
from ldeconf.lde.exceptions import DomainMismatchError, LDEError, StepUnderflowError
from ldeconf.lde.functions import LinearCombination, constant_function
from ldeconf.lde.serializers import PolynomialCoefficient
from ldeconf.lde.solver import taylor_series, taylor_solve, taylor_solve_basis
from ldeconf.utils.config_loader import SolverConfig

pytestmark = pytest.mark.unit


@pytest.fixture
def harmonic():
    """f'' + f = 0 on the plane."""
    return constant_ode([1.0])


class TestLinearODE:
    """Tests for LinearODE validation."""

    def test_order_out_of_range(self):
        """Order 1 and order above the supported maximum are rejected."""
        plane = ComplexPlane()
        with pytest.raises(LDEError):
            LinearODE(1, (), plane)
        with pytest.raises(LDEError):
            LinearODE(9, tuple(constant_function(1.0, plane) for _ in range(8)), plane)

    def test_coefficient_count(self):
        """An order-k equation takes exactly k - 1 coefficients."""
        plane = ComplexPlane()
        with pytest.raises(LDEError, match="k - 1"):
            LinearODE(3, (constant_function(1.0, plane),), plane)

    def test_domain_mismatch(self):
        """Coefficients must live on the equation's domain."""
        with pytest.raises(DomainMismatchError):
            LinearODE(2, (constant_function(1.0, UnitDisc()),), ComplexPlane())

    def test_coefficient_values(self):
        """Coefficient values come back in increasing derivative order."""
        ode = constant_ode([2.0, 3.0])

        values = ode.coefficient_values(0.5)

        assert values.tolist() == [2.0, 3.0]


class TestResidual:
    """Tests for the relative residual."""

    def test_exact_solution(self, harmonic):
        """cos solves f'' + f = 0."""
        cosine = ExponentialSum([1j, -1j], [0.5, 0.5])

        assert abs(residual(harmonic, cosine, 0.7 - 0.2j)) < 1e-12

    def test_perturbed_solution(self, harmonic):
        """Adding z^2/2 to cos leaves a unit relative residual at the origin."""
        plane = ComplexPlane()
        cosine = ExponentialSum([1j, -1j], [0.5, 0.5])
        bump = PolynomialCoefficient(coeffs=[0, 0, 0.5]).build(plane)
        perturbed = LinearCombination([cosine, bump], [1.0, 1.0])

        assert abs(residual(harmonic, perturbed, 0.0)) == pytest.approx(1.0)

    def test_max_residual(self, harmonic):
        """max_residual covers every solution and point."""
        basis = [ExponentialSum([1j]), ExponentialSum([-1j])]

        assert max_residual(harmonic, basis, [0.0, 1.0, 2j]) < 1e-12


class TestTaylorSeries:
    """Tests for the local series recurrence."""

    def test_cosine_coefficients(self, harmonic):
        """The series of cos at 0 alternates 1, -1/2, 1/24, ..."""
        series = taylor_series(harmonic, 0.0, [1.0, 0.0], 6)

        expected = [1.0, 0.0, -0.5, 0.0, 1 / 24, 0.0, -1 / 720]
        np.testing.assert_allclose(series, expected, atol=1e-15)

    def test_matrix_initial_data(self, harmonic):
        """Several columns are expanded at once."""
        series = taylor_series(harmonic, 0.0, np.eye(2), 4)

        assert series.shape == (5, 2)
        assert series[3, 1] == pytest.approx(-1 / 6)


class TestTaylorSolve:
    """Tests for taylor_solve and taylor_solve_basis."""

    def test_cosine_values(self, harmonic):
        """The continuation reproduces cos along the real axis and off it."""
        g = taylor_solve(harmonic, 0.0, [1.0, 0.0])

        assert g.value(0.5) == pytest.approx(math.cos(0.5), rel=1e-12)
        assert g.value(1.0) == pytest.approx(math.cos(1.0), rel=1e-10)
        assert g.value(2 + 1j) == pytest.approx(cmath.cos(2 + 1j), rel=1e-9)

    def test_derivatives_from_jet(self, harmonic):
        """Jets carry the derivatives of the solution."""
        g = taylor_solve(harmonic, 0.0, [1.0, 0.0])

        derivs = g.jet_at(0.8, 2).derivative_values()

        assert derivs[1] == pytest.approx(-math.sin(0.8), rel=1e-10)
        assert derivs[2] == pytest.approx(-math.cos(0.8), rel=1e-10)

    def test_zero_initial_data(self, harmonic):
        """Zero initial data give the zero solution."""
        g = taylor_solve(harmonic, 0.0, [0.0, 0.0])

        assert g.value(3.0 - 1j) == 0

    def test_disc_domain_near_boundary(self):
        """On the disc, steps shrink toward the boundary and stay accurate."""
        ode = constant_ode([1.0], UnitDisc())
        g = taylor_solve(ode, 0.0, [1.0, 0.0])

        assert g.value(0.9) == pytest.approx(math.cos(0.9), rel=1e-10)
        assert g.value(-0.9j) == pytest.approx(cmath.cos(-0.9j), rel=1e-10)

    def test_eager_path(self, harmonic):
        """An eager path stores the discs along the polyline."""
        g = taylor_solve(harmonic, 0.0, [1.0, 0.0], path=[5.0])

        assert len(g.continuation.discs) > 1
        assert g.value(5.0) == pytest.approx(math.cos(5.0), rel=1e-9)

    def test_linearity(self, harmonic):
        """The solution of summed data is the sum of the solutions."""
        first, second = taylor_solve_basis(harmonic, 0.0, np.eye(2))
        summed = taylor_solve(harmonic, 0.0, [1.0, 1.0])
        z = 1.5 + 0.5j

        assert summed.value(z) == pytest.approx(first.value(z) + second.value(z), rel=1e-9)

    def test_basis_shares_continuation(self, harmonic):
        """Basis members share one continuation."""
        first, second = taylor_solve_basis(harmonic, 0.0, np.eye(2))

        assert first.continuation is second.continuation
        assert second.initial.tolist() == [0.0, 1.0]
        assert second.value(1.0) == pytest.approx(math.sin(1.0), rel=1e-10)

    def test_bad_initial_shape(self, harmonic):
        """Initial data must hold k values."""
        with pytest.raises(LDEError, match="k values"):
            taylor_solve(harmonic, 0.0, [1.0, 0.0, 0.0])
        with pytest.raises(LDEError, match="k rows"):
            taylor_solve_basis(harmonic, 0.0, np.eye(3))

    def test_initial_point_outside_domain(self):
        """The initial point must lie in the domain."""
        ode = constant_ode([1.0], UnitDisc())

        with pytest.raises(LDEError, match="outside"):
            taylor_solve(ode, 2.0, [1.0, 0.0])

    def test_query_outside_domain(self):
        """Queries outside the domain are rejected."""
        ode = constant_ode([1.0], UnitDisc())
        g = taylor_solve(ode, 0.0, [1.0, 0.0])

        with pytest.raises(LDEError, match="outside"):
            g.value(1.5)

    def test_step_underflow(self, harmonic):
        """A continuation out of steps reports the last reachable point."""
        g = taylor_solve(harmonic, 0.0, [1.0, 0.0], config=SolverConfig(max_steps=1))

        with pytest.raises(StepUnderflowError) as exc_info:
            g.value(50.0)

        assert 0 < exc_info.value.last_radius < 50
        assert "last_radius" in str(exc_info.value)

    def test_step_budget_is_per_request(self):
        """Many short continuations may together exceed max_steps."""
        ode = constant_ode([1.0], UnitDisc())
        g = taylor_solve(ode, 0.0, [1.0, 0.0], config=SolverConfig(max_steps=60))

        for t in range(40):
            z = 0.9 * cmath.exp(2j * math.pi * t / 40)
            assert g.value(z) == pytest.approx(cmath.cos(z), rel=1e-8)

        assert len(g.continuation.discs) > 60
