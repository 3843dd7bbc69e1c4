"""Tests for CLI ConfigManager."""

from __future__ import annotations

import json
from pathlib import Path

import pytest
import yaml

from ldeconf.cli.config import ConfigLoadError, ConfigManager, ConfigValidationError
from ldeconf.utils.config_loader import AppConfig

pytestmark = pytest.mark.unit


class TestConfigManager:
    """Tests for ConfigManager class."""

    @pytest.fixture
    def manager(self) -> ConfigManager:
        return ConfigManager(strict_env=False)

    @pytest.fixture(autouse=True)
    def isolated_home(self, tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
        """Default search paths point at empty directories."""
        monkeypatch.chdir(tmp_path)
        monkeypatch.setenv("HOME", str(tmp_path / "home"))

    def write_yaml(self, path: Path, data: object) -> Path:
        path.write_text(yaml.safe_dump(data), encoding="utf-8")
        return path

    def test_defaults_without_file(self, manager: ConfigManager) -> None:
        """No file gives the built-in defaults."""
        config = manager.load_app_config()

        assert config == AppConfig()
        assert manager.source is None

    def test_current_directory_file(self, manager: ConfigManager, tmp_path: Path) -> None:
        """./ldeconf.yaml is picked up."""
        self.write_yaml(tmp_path / "ldeconf.yaml", {"report": {"shrink_b": 0.25}})

        config = manager.load_app_config()

        assert config.report.shrink_b == 0.25
        assert manager.source is not None
        assert manager.source.resolve() == (tmp_path / "ldeconf.yaml").resolve()

    def test_explicit_file(self, manager: ConfigManager, tmp_path: Path) -> None:
        """An explicit path wins over the search."""
        path = self.write_yaml(tmp_path / "run.yaml", {"solver": {"order": 40}})

        assert manager.load_app_config(path).solver.order == 40

    def test_json_file(self, manager: ConfigManager, tmp_path: Path) -> None:
        """JSON is valid YAML."""
        path = tmp_path / "run.json"
        path.write_text(json.dumps({"quadrature": {"rel_tol": 0.001}}), encoding="utf-8")

        assert manager.load_app_config(path).quadrature.rel_tol == 0.001

    def test_missing_file(self, manager: ConfigManager, tmp_path: Path) -> None:
        """A missing explicit path is an error."""
        with pytest.raises(ConfigLoadError, match="not found"):
            manager.load_app_config(tmp_path / "missing.yaml")

    def test_directory_path(self, manager: ConfigManager, tmp_path: Path) -> None:
        """A directory is not a config file."""
        with pytest.raises(ConfigLoadError, match="not a file"):
            manager.load_app_config(tmp_path)

    def test_invalid_yaml(self, manager: ConfigManager, tmp_path: Path) -> None:
        """Broken YAML is reported with the path."""
        path = tmp_path / "bad.yaml"
        path.write_text("report: [unclosed", encoding="utf-8")

        with pytest.raises(ConfigLoadError, match="Invalid YAML"):
            manager.load_app_config(path)

    def test_non_mapping(self, manager: ConfigManager, tmp_path: Path) -> None:
        """The top level must be a mapping."""
        path = self.write_yaml(tmp_path / "list.yaml", [1, 2])

        with pytest.raises(ConfigValidationError, match="mapping"):
            manager.load_app_config(path)

    def test_empty_file(self, manager: ConfigManager, tmp_path: Path) -> None:
        """An empty file means defaults."""
        path = tmp_path / "empty.yaml"
        path.write_text("", encoding="utf-8")

        assert manager.load_app_config(path) == AppConfig()

    def test_out_of_range_field(self, manager: ConfigManager, tmp_path: Path) -> None:
        """The message names the offending field."""
        path = self.write_yaml(tmp_path / "bad.yaml", {"report": {"shrink_b": 2.0}})

        with pytest.raises(ConfigValidationError, match="report.shrink_b"):
            manager.load_app_config(path)

    def test_env_expansion(
        self, manager: ConfigManager, tmp_path: Path, monkeypatch: pytest.MonkeyPatch
    ) -> None:
        """${VAR} values are expanded."""
        monkeypatch.setenv("LDECONF_OUT", "/tmp/ldeconf-out")
        path = self.write_yaml(tmp_path / "env.yaml", {"output": {"directory": "${LDECONF_OUT}"}})

        assert manager.load_app_config(path).output.directory == "/tmp/ldeconf-out"

    def test_strict_env(self, tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
        """Strict mode rejects unset variables."""
        monkeypatch.delenv("LDECONF_UNSET", raising=False)
        path = self.write_yaml(tmp_path / "env.yaml", {"output": {"directory": "$LDECONF_UNSET"}})

        with pytest.raises(ConfigValidationError, match="LDECONF_UNSET"):
            ConfigManager(strict_env=True).load_app_config(path)


class TestOverrides:
    """Tests for flag overrides and run records."""

    def test_override_wins(self) -> None:
        """Flags replace file values."""
        manager = ConfigManager()

        config = manager.apply_overrides(AppConfig(), {"report": {"shrink_b": 0.25}})

        assert config.report.shrink_b == 0.25

    def test_none_is_unset(self) -> None:
        """None leaves the value alone."""
        config = ConfigManager().apply_overrides(AppConfig(), {"report": {"shrink_b": None}})

        assert config.report.shrink_b == AppConfig().report.shrink_b

    def test_invalid_override(self) -> None:
        """Out-of-range flags are validation errors."""
        with pytest.raises(ConfigValidationError, match="shrink_b"):
            ConfigManager().apply_overrides(AppConfig(), {"report": {"shrink_b": 1.5}})

    def test_run_record(self, tmp_path: Path) -> None:
        """run.json holds the command, parameters and resolved config."""
        manager = ConfigManager()

        path = manager.write_run_record(tmp_path / "out", AppConfig(), "bell", {"i": 4})

        record = json.loads(path.read_text(encoding="utf-8"))
        assert path.name == "run.json"
        assert record["command"] == "bell"
        assert record["params"] == {"i": 4}
        assert record["config"]["report"]["shrink_b"] == 0.5
        assert record["version"]
