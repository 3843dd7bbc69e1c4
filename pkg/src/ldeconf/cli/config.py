"""
Configuration management for CLI.

This module provides ConfigManager class for loading, validating and
overriding the numeric configuration of a run. Precedence is
command-line flags over the config file over built-in defaults; the
resolved configuration is echoed into the output directory as run.json.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

import yaml
from pydantic import ValidationError

from ldeconf.__version__ import __version__
from ldeconf.utils.config_loader import (
    AppConfig,
    expand_env_vars,
    get_default_config_path,
)
from ldeconf.utils.logger import get_logger

logger = get_logger(__name__)

RUN_RECORD = "run.json"


class ConfigLoadError(Exception):
    """Configuration loading error."""


class ConfigValidationError(Exception):
    """Configuration validation error."""


def _describe_validation(error: ValidationError) -> str:
    parts = []
    for err in error.errors():
        field = ".".join(str(part) for part in err["loc"])
        parts.append(f"{field}: {err['msg']}")
    return "; ".join(parts)


class ConfigManager:
    """
    Manages configuration loading and validation for CLI.

    This class handles:
    - Searching for config files in the default locations
    - Loading YAML or JSON configuration with environment expansion
    - Applying command-line overrides on top of the file
    - Writing the resolved configuration next to the artifacts

    Examples:
        >>> manager = ConfigManager()
        >>> config = manager.load_app_config()
        >>> config = manager.apply_overrides(config, {"report": {"shrink_b": 0.25}})
    """

    def __init__(self, strict_env: bool = False) -> None:
        """
        Initialize ConfigManager.

        Args:
            strict_env: If True, raise error when environment variables are not found.
        """
        self.strict_env = strict_env
        self.source: Path | None = None

    def load_config(self, config_path: Path | None = None) -> dict[str, Any]:
        """
        Load configuration data from file.

        Search order:
        1. Specified config_path
        2. ./ldeconf.yaml (current directory)
        3. ~/.ldeconf/config.yaml (home directory)
        4. Default configuration

        Raises:
            ConfigLoadError: If config file not found or invalid YAML format
            ConfigValidationError: If environment expansion fails
        """
        resolved_path = self._resolve_config_path(config_path)
        self.source = resolved_path

        if resolved_path is None:
            logger.debug("config_defaults_used")
            return {}

        logger.info("config_loading", config_path=str(resolved_path))
        return self._load_from_file(resolved_path)

    def _resolve_config_path(self, config_path: Path | None) -> Path | None:
        if config_path is not None:
            if not config_path.exists():
                raise ConfigLoadError(f"Specified config file not found: {config_path}")
            if not config_path.is_file():
                raise ConfigLoadError(f"Config path is not a file: {config_path}")
            return config_path.resolve()
        return get_default_config_path()

    def _load_from_file(self, config_path: Path) -> dict[str, Any]:
        try:
            with config_path.open("r", encoding="utf-8") as f:
                raw_data: Any = yaml.safe_load(f)
        except yaml.YAMLError as e:
            raise ConfigLoadError(f"Invalid YAML format in {config_path}: {e}") from e
        except OSError as e:
            raise ConfigLoadError(f"Failed to read config file {config_path}: {e}") from e

        if raw_data is None:
            logger.warning("config_file_empty", config_path=str(config_path))
            return {}
        if not isinstance(raw_data, dict):
            raise ConfigValidationError(
                f"Config file {config_path} must contain a mapping, "
                f"got {type(raw_data).__name__}"
            )

        try:
            expanded: dict[str, Any] = expand_env_vars(raw_data, strict=self.strict_env)
        except ValueError as e:
            raise ConfigValidationError(f"Configuration error in {config_path}: {e}") from e
        return expanded

    def load_app_config(self, config_path: Path | None = None) -> AppConfig:
        """
        Load configuration as AppConfig model.

        Raises:
            ConfigLoadError: If config loading fails
            ConfigValidationError: If a field is invalid; the message names it
        """
        data = self.load_config(config_path)
        try:
            return AppConfig.model_validate(data)
        except ValidationError as e:
            raise ConfigValidationError(
                f"Invalid configuration: {_describe_validation(e)}"
            ) from e

    def apply_overrides(self, config: AppConfig, overrides: dict[str, dict[str, Any]]) -> AppConfig:
        """
        Return a copy of config with section values replaced by flags.

        None values are treated as unset.

        Raises:
            ConfigValidationError: If an override is out of range
        """
        data = config.model_dump()
        for section, values in overrides.items():
            for key, value in values.items():
                if value is not None:
                    data.setdefault(section, {})[key] = value
        try:
            return AppConfig.model_validate(data)
        except ValidationError as e:
            raise ConfigValidationError(f"Invalid option: {_describe_validation(e)}") from e

    def run_record(
        self, config: AppConfig, command: str, params: dict[str, Any]
    ) -> dict[str, Any]:
        """Resolved configuration and parameters of one run."""
        return {
            "version": __version__,
            "command": command,
            "config_source": str(self.source) if self.source else None,
            "params": params,
            "config": config.model_dump(mode="json"),
        }

    def write_run_record(
        self, output_dir: Path, config: AppConfig, command: str, params: dict[str, Any]
    ) -> Path:
        """Write run.json into output_dir and return its path."""
        output_dir.mkdir(parents=True, exist_ok=True)
        path = output_dir / RUN_RECORD
        record = self.run_record(config, command, params)
        path.write_text(json.dumps(record, indent=2, default=str) + "\n", encoding="utf-8")
        logger.debug("run_record_written", path=str(path))
        return path
