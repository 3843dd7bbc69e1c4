"""Version information for ldeconf."""

__version__ = "0.1.0"
__author__ = "ldeconf contributors"
__license__ = "MIT"
