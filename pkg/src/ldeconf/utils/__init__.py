"""Utility helpers: logging, configuration loading, file output."""
