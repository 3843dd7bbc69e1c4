"""Shared fixtures for the ldeconf test suite."""

import json
from collections.abc import Callable
from pathlib import Path
from typing import Any

import pytest

from ldeconf.utils.config_loader import AppConfig


@pytest.fixture
def fast_config() -> AppConfig:
    """Configuration with coarse grids so that report tests stay quick."""
    return AppConfig.model_validate(
        {
            "quadrature": {"radial_nodes": 32, "angular_nodes": 64, "max_refinements": 3},
            "report": {"counting_points": 4},
        }
    )


@pytest.fixture
def write_json(tmp_path: Path) -> Callable[[str, Any], Path]:
    """Write a JSON document below tmp_path and return its path."""

    def _write(name: str, data: Any) -> Path:
        path = tmp_path / name
        path.write_text(json.dumps(data), encoding="utf-8")
        return path

    return _write


@pytest.fixture
def constant_ode_file(write_json: Callable[[str, Any], Path]) -> Path:
    """f'' + f = 0 on the whole plane."""
    return write_json(
        "const2.json",
        {"order": 2, "coeffs": [{"kind": "constant", "value": 1}], "domain": "plane"},
    )
