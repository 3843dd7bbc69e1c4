"""Tests for jet determinants and linear solves."""

import numpy as np
import pytest

from ldeconf.jetcalc.exceptions import JetError
from ldeconf.jetcalc.jet import ComplexJet, max_relative_difference
from ldeconf.jetcalc.linalg import constant_terms, jet_det, jet_solve

pytestmark = pytest.mark.unit


def random_matrix(rng, size, center=0.0, order=4):
    return [
        [ComplexJet(center, rng.normal(size=order + 1) + 1j * rng.normal(size=order + 1))
         for _ in range(size)]
        for _ in range(size)
    ]


class TestJetDet:
    """Tests for jet_det."""

    @pytest.mark.parametrize("size", [1, 2, 3, 5])
    def test_constant_term_matches_numpy(self, size):
        """The value of the determinant is the numeric determinant."""
        rng = np.random.default_rng(size)
        matrix = random_matrix(rng, size)
        expected = np.linalg.det(constant_terms(matrix))
        assert jet_det(matrix).value == pytest.approx(expected, rel=1e-10)

    def test_polynomial_entries(self):
        """det [[1+z, z], [z, 1]] = 1 + z - z^2."""
        z = ComplexJet.variable(0, 3)
        det = jet_det([[1 + z, z], [z, 1 + 0 * z]])
        np.testing.assert_allclose(det.coeffs, [1, 1, -1, 0], atol=1e-15)

    def test_row_swap_sign(self):
        """det [[z, 1], [1, z]] = z^2 - 1 needs a pivot swap at z = 0."""
        z = ComplexJet.variable(0, 2)
        one = ComplexJet.constant(1, 0, 2)
        det = jet_det([[z, one], [one, z]])
        np.testing.assert_allclose(det.coeffs, [-1, 0, 1], atol=1e-15)

    def test_cofactor_fallback(self):
        """A column vanishing at the center falls back to cofactor expansion."""
        z = ComplexJet.variable(0, 2)
        one = ComplexJet.constant(1, 0, 2)
        det = jet_det([[z, one], [z, one]])
        np.testing.assert_allclose(det.coeffs, [0, 0, 0], atol=1e-15)

    def test_non_square(self):
        """Non-square or empty matrices raise."""
        one = ComplexJet.constant(1, 0, 1)
        with pytest.raises(JetError):
            jet_det([[one, one]])
        with pytest.raises(JetError):
            jet_det([])


class TestJetSolve:
    """Tests for jet_solve."""

    def test_solution_satisfies_system(self):
        """Multiplying back reproduces the right-hand side."""
        rng = np.random.default_rng(7)
        matrix = random_matrix(rng, 4, center=0.3j)
        rhs = [ComplexJet(0.3j, rng.normal(size=5)) for _ in range(4)]
        x = jet_solve(matrix, rhs)
        for row, b in zip(matrix, rhs, strict=True):
            total = row[0] * x[0]
            for entry, xi in zip(row[1:], x[1:], strict=True):
                total = total + entry * xi
            assert max_relative_difference(total, b) < 1e-10

    def test_singular(self):
        """A matrix singular at its constant term raises."""
        one = ComplexJet.constant(1, 0, 2)
        with pytest.raises(JetError):
            jet_solve([[one, one], [one, one]], [one, one])

    def test_rhs_length(self):
        """The right-hand side must match the matrix size."""
        one = ComplexJet.constant(1, 0, 2)
        with pytest.raises(JetError):
            jet_solve([[one]], [one, one])
