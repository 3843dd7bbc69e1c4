"""Unit tests for config_loader."""

import pytest
from pydantic import ValidationError

from ldeconf.utils.config_loader import (
    AppConfig,
    QuadratureConfig,
    SolverConfig,
    expand_env_vars,
    load_config,
)

pytestmark = pytest.mark.unit


class TestExpandEnvVars:
    """Tests for expand_env_vars function."""

    def test_expand_env_var_braces(self, monkeypatch):
        """${VAR} is expanded."""
        monkeypatch.setenv("LDECONF_OUT", "runs")
        assert expand_env_vars("${LDECONF_OUT}") == "runs"

    def test_expand_env_var_dollar(self, monkeypatch):
        """$VAR is expanded."""
        monkeypatch.setenv("LDECONF_OUT", "runs")
        assert expand_env_vars("$LDECONF_OUT") == "runs"

    def test_expand_env_var_nested(self, monkeypatch):
        """Dicts and lists are walked recursively."""
        monkeypatch.setenv("LDECONF_LEVEL", "DEBUG")

        data = {"logging": {"level": "${LDECONF_LEVEL}"}, "tags": ["$LDECONF_LEVEL", "x"]}
        result = expand_env_vars(data)

        assert result == {"logging": {"level": "DEBUG"}, "tags": ["DEBUG", "x"]}

    def test_expand_env_var_missing_non_strict(self, monkeypatch):
        """Unset variables stay as written."""
        monkeypatch.delenv("MISSING_VAR", raising=False)

        assert expand_env_vars("${MISSING_VAR}", strict=False) == "${MISSING_VAR}"

    def test_expand_env_var_missing_strict(self, monkeypatch):
        """Strict mode rejects unset variables."""
        monkeypatch.delenv("MISSING_VAR", raising=False)

        with pytest.raises(ValueError, match="Environment variable 'MISSING_VAR' not found"):
            expand_env_vars("${MISSING_VAR}", strict=True)

    def test_expand_env_var_non_string(self):
        """Numbers, booleans and None pass through."""
        assert expand_env_vars(123) == 123
        assert expand_env_vars(True) is True
        assert expand_env_vars(None) is None

    def test_expand_env_var_partial_match(self):
        """Only whole-value references are expanded."""
        assert expand_env_vars("prefix_${VAR}_suffix") == "prefix_${VAR}_suffix"


class TestAppConfig:
    """Tests for the numeric configuration sections."""

    def test_defaults(self):
        """Defaults match the documented numeric settings."""
        config = AppConfig()

        assert config.solver.order == 30
        assert config.quadrature.rel_tol == 0.005
        assert config.report.shrink_b == 0.5
        assert config.counting.proximity_nodes >= 256

    @pytest.mark.parametrize(
        ("model", "data"),
        [
            (SolverConfig, {"order": 4}),
            (QuadratureConfig, {"rel_tol": 0.0}),
            (QuadratureConfig, {"max_refinements": 9}),
        ],
    )
    def test_ranges(self, model, data):
        """Out-of-range settings are rejected."""
        with pytest.raises(ValidationError):
            model.model_validate(data)


class TestLoadConfig:
    """Tests for load_config function."""

    def test_load_config_default(self):
        """No path gives defaults."""
        assert load_config(None) == AppConfig()

    def test_load_config_from_file(self, tmp_path):
        """Sections are read from YAML."""
        config_path = tmp_path / "config.yaml"
        config_path.write_text(
            """
logging:
  level: DEBUG
  format: json

solver:
  order: 40

quadrature:
  radial_nodes: 64
  angular_nodes: 256

output:
  directory: ./custom_output
""",
            encoding="utf-8",
        )

        config = load_config(config_path)

        assert config.logging.level == "DEBUG"
        assert config.logging.format == "json"
        assert config.solver.order == 40
        assert config.quadrature.radial_nodes == 64
        assert config.output.directory == "./custom_output"

    def test_load_config_with_env_vars(self, tmp_path, monkeypatch):
        """Environment references are expanded before validation."""
        monkeypatch.setenv("OUTPUT_DIR", "/tmp/output")
        config_path = tmp_path / "config.yaml"
        config_path.write_text("output:\n  directory: ${OUTPUT_DIR}\n", encoding="utf-8")

        assert load_config(config_path).output.directory == "/tmp/output"

    def test_load_config_missing_env_var_strict(self, tmp_path, monkeypatch):
        """Strict expansion reports the file."""
        monkeypatch.delenv("MISSING_DIR", raising=False)
        config_path = tmp_path / "config.yaml"
        config_path.write_text("output:\n  directory: ${MISSING_DIR}\n", encoding="utf-8")

        with pytest.raises(ValueError, match="Configuration error"):
            load_config(config_path, strict_env=True)

    def test_load_config_nonexistent_file(self):
        """Missing files raise FileNotFoundError."""
        with pytest.raises(FileNotFoundError, match="Config file not found"):
            load_config("nonexistent.yaml")

    def test_load_config_invalid_yaml(self, tmp_path):
        """Broken YAML raises ValueError."""
        config_path = tmp_path / "invalid.yaml"
        config_path.write_text("{ invalid yaml: ]", encoding="utf-8")

        with pytest.raises(ValueError, match="Invalid YAML format"):
            load_config(config_path)

    def test_load_config_empty_file(self, tmp_path):
        """An empty file gives defaults."""
        config_path = tmp_path / "empty.yaml"
        config_path.write_text("", encoding="utf-8")

        assert load_config(config_path) == AppConfig()

    def test_load_config_invalid_schema(self, tmp_path):
        """Out-of-range values are rejected with the path."""
        config_path = tmp_path / "invalid_schema.yaml"
        config_path.write_text("report:\n  shrink_b: 1.5\n", encoding="utf-8")

        with pytest.raises(ValueError, match="Invalid configuration schema"):
            load_config(config_path)
