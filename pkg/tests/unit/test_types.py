"""Unit tests for complex value parsing."""

import pytest
from pydantic import BaseModel

from ldeconf.core.types import ComplexValue, dump_complex, parse_complex

pytestmark = pytest.mark.unit


class Point(BaseModel):
    z: ComplexValue


class TestParseComplex:
    """Tests for parse_complex."""

    @pytest.mark.parametrize(
        ("value", "expected"),
        [
            (2, 2 + 0j),
            ("1+2j", 1 + 2j),
            ("1 + 2i", 1 + 2j),
            ([0.5, -1], 0.5 - 1j),
            ({"re": 1.0}, 1 + 0j),
            ({"im": 3}, 3j),
        ],
    )
    def test_forms(self, value, expected):
        """Numbers, strings, pairs and mappings are accepted."""
        assert parse_complex(value) == expected

    @pytest.mark.parametrize("value", [True, "abc", [1, 2, 3], {"x": 1}, "inf"])
    def test_rejected(self, value):
        """Unreadable or infinite values are rejected."""
        with pytest.raises(ValueError):
            parse_complex(value)


class TestComplexValue:
    """Tests for the pydantic complex field."""

    def test_validation_and_dump(self):
        """Real values dump as numbers, others as pairs."""
        assert Point(z="0.5j").model_dump(mode="json") == {"z": [0.0, 0.5]}
        assert Point(z=2).model_dump(mode="json") == {"z": 2.0}

    def test_dump_complex(self):
        """dump_complex keeps real values plain."""
        assert dump_complex(1.5 + 0j) == 1.5
