"""Shared data types."""

from ldeconf.core.types import ComplexValue, parse_complex

__all__ = ["ComplexValue", "parse_complex"]
