"""Tests for zero directions of exponential sums."""

import math

import pytest

from ldeconf.oscillation.directions import exp_sum_directions
from ldeconf.oscillation.exceptions import OscillationError

pytestmark = pytest.mark.unit


class TestExpSumDirections:
    """Tests for exp_sum_directions."""

    def test_real_pair(self):
        """e^w and e^-w have zeros along the imaginary axis."""
        assert exp_sum_directions([1, -1]) == pytest.approx([-math.pi / 2, math.pi / 2])

    def test_imaginary_pair(self):
        """e^{iw} and e^{2iw} have zeros along the real axis."""
        assert exp_sum_directions([1j, 2j]) == pytest.approx([0.0, math.pi])

    def test_square(self):
        """Fourth roots of unity give the diagonals."""
        expected = [-3 * math.pi / 4, -math.pi / 4, math.pi / 4, 3 * math.pi / 4]

        assert exp_sum_directions([1, 1j, -1, -1j]) == pytest.approx(expected)

    def test_triangle(self):
        """Each hull edge contributes its outer normal."""
        directions = exp_sum_directions([1, -1 + 0.3j, -1 - 0.3j])

        assert directions == pytest.approx([-1.4218, 1.4218, math.pi], abs=1e-4)

    def test_interior_root_ignored(self):
        """Roots inside the hull do not add directions."""
        square = [1, 1j, -1, -1j]

        assert exp_sum_directions([*square, 0.1 + 0.1j]) == pytest.approx(
            exp_sum_directions(square)
        )

    def test_single_root(self):
        """At least two roots are needed."""
        with pytest.raises(OscillationError):
            exp_sum_directions([1.0])

    def test_equal_roots(self):
        """Coinciding roots have no hull."""
        with pytest.raises(OscillationError, match="coincide"):
            exp_sum_directions([1j, 1j, 1j])
