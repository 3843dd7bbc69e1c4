"""ldeconf - conformal transformation and oscillation of linear differential equations."""

from ldeconf.__version__ import __author__, __license__, __version__

__all__ = ["__version__", "__author__", "__license__"]
