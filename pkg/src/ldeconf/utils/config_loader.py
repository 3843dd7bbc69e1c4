"""Configuration loading utilities."""

import os
from pathlib import Path
from typing import Any

import structlog
import yaml
from pydantic import BaseModel, ConfigDict, Field


class JetConfig(BaseModel):
    """Jet arithmetic settings."""

    model_config = ConfigDict(frozen=True)

    extra_order: int = Field(
        default=2, ge=0, le=16, description="Jet order headroom: default order is 2k + extra"
    )
    bell_max_index: int = Field(
        default=20, ge=1, le=20, description="Largest Bell index with exact coefficients"
    )


class SolverConfig(BaseModel):
    """Taylor continuation settings."""

    model_config = ConfigDict(frozen=True)

    order: int = Field(default=30, ge=8, le=80, description="Taylor order per step")
    safety: float = Field(
        default=0.5, gt=0.0, lt=1.0, description="Step as a fraction of boundary distance"
    )
    tolerance: float = Field(
        default=1e-16, gt=0.0, lt=1e-3, description="Relative size of the last kept terms"
    )
    max_steps: int = Field(default=20000, ge=1, description="Steps allowed per request")
    min_step: float = Field(default=1e-12, gt=0.0, description="Smallest admissible step")


class QuadratureConfig(BaseModel):
    """Polar quadrature settings for coefficient integrals."""

    model_config = ConfigDict(frozen=True)

    radial_nodes: int = Field(default=128, ge=8, description="Midpoint nodes in radius")
    angular_nodes: int = Field(default=512, ge=16, description="Trapezoid nodes in angle")
    rel_tol: float = Field(default=0.005, gt=0.0, lt=1.0, description="Refinement stop")
    max_refinements: int = Field(default=4, ge=0, le=8, description="Grid doublings")
    chunk_rows: int = Field(default=64, ge=1, description="Radial rows evaluated per batch")


class CountingConfig(BaseModel):
    """Argument-principle zero counting settings."""

    model_config = ConfigDict(frozen=True)

    integer_tol: float = Field(
        default=0.01, gt=0.0, lt=0.5, description="Allowed distance to an integer"
    )
    perturbation: float = Field(
        default=1e-4, gt=0.0, lt=0.1, description="Radius perturbation in units of 1 - r"
    )
    retries: int = Field(default=5, ge=0, description="Perturbed retries")
    gauss_nodes: int = Field(default=16, ge=4, le=64, description="Gauss nodes per panel")
    initial_panels: int = Field(default=64, ge=4, description="Panels on the first pass")
    max_panels: int = Field(default=1 << 16, ge=16, description="Panel budget per contour")
    panel_tol: float = Field(default=1e-3, gt=0.0, description="Total contour error budget")
    bisection_tol: float = Field(default=1e-6, gt=0.0, description="Zero radius resolution")
    max_bisections: int = Field(
        default=400, ge=0, description="Count evaluations spent locating zero radii"
    )
    proximity_nodes: int = Field(default=256, ge=256, description="Circle average nodes")
    proximity_tol: float = Field(default=1e-4, gt=0.0, description="Circle average stop")


class ReportConfig(BaseModel):
    """Oscillation report settings."""

    model_config = ConfigDict(frozen=True)

    shrink_b: float = Field(default=0.5, gt=0.0, lt=1.0, description="s(r) = 1 - b(1 - r)")
    counting_points: int = Field(
        default=48, ge=4, description="Extra radii on the counting grid"
    )
    max_workers: int = Field(default=1, ge=1, description="Threads for per-radius work")


class OutputConfig(BaseModel):
    """Output configuration."""

    directory: str = Field(default="./output", description="Output directory")
    overwrite: bool = Field(default=True, description="Overwrite existing artifacts")


class LoggingConfig(BaseModel):
    """Logging configuration."""

    level: str = Field(default="WARNING", description="Log level")
    format: str = Field(default="console", description="Log format")


class AppConfig(BaseModel):
    """Application configuration."""

    jets: JetConfig = Field(default_factory=JetConfig)
    solver: SolverConfig = Field(default_factory=SolverConfig)
    quadrature: QuadratureConfig = Field(default_factory=QuadratureConfig)
    counting: CountingConfig = Field(default_factory=CountingConfig)
    report: ReportConfig = Field(default_factory=ReportConfig)
    output: OutputConfig = Field(default_factory=OutputConfig)
    logging: LoggingConfig = Field(default_factory=LoggingConfig)


def expand_env_vars(value: Any, strict: bool = False) -> Any:
    """
    Recursively expand environment variables in config values.

    Args:
        value: Value to expand (str, dict, list, or other)
        strict: If True, raise ValueError when environment variable is not found

    Returns:
        Value with environment variables expanded

    Raises:
        ValueError: If strict=True and environment variable is not found

    Examples:
        >>> expand_env_vars("${HOME}/out")
        "/home/user/out"
    """
    if isinstance(value, str):
        if value.startswith("${") and value.endswith("}"):
            var_name = value[2:-1]
        elif value.startswith("$"):
            var_name = value[1:]
        else:
            return value
        env_value = os.environ.get(var_name)
        if env_value is None:
            if strict:
                raise ValueError(
                    f"Environment variable '{var_name}' not found. "
                    f"Set it or use non-strict mode."
                )
            structlog.get_logger().warning("env_var_not_found", var_name=var_name)
            return value
        return env_value
    elif isinstance(value, dict):
        return {k: expand_env_vars(v, strict) for k, v in value.items()}
    elif isinstance(value, list):
        return [expand_env_vars(item, strict) for item in value]
    return value


def load_config(config_path: str | Path | None = None, strict_env: bool = False) -> AppConfig:
    """
    Load configuration from a YAML (or JSON) file.

    Args:
        config_path: Path to config file. If None, uses default config.
        strict_env: If True, raise error when environment variables are not found.

    Returns:
        Loaded configuration

    Raises:
        FileNotFoundError: If config file not found
        ValueError: If config is invalid or environment variable is missing (strict_env=True)
    """
    if config_path is None:
        return AppConfig()

    path = Path(config_path)
    if not path.exists():
        raise FileNotFoundError(f"Config file not found: {path}")

    try:
        with path.open("r", encoding="utf-8") as f:
            data = yaml.safe_load(f)
    except yaml.YAMLError as e:
        raise ValueError(f"Invalid YAML format in {path}: {e}") from e

    if not data:
        return AppConfig()

    try:
        data = expand_env_vars(data, strict=strict_env)
    except ValueError as e:
        raise ValueError(f"Configuration error in {path}: {e}") from e

    try:
        return AppConfig.model_validate(data)
    except Exception as e:
        raise ValueError(f"Invalid configuration schema in {path}: {e}") from e


def get_default_config_path() -> Path | None:
    """
    Get default config file path.

    Searches in order:
    1. ./ldeconf.yaml
    2. ~/.ldeconf/config.yaml
    3. None (use defaults)

    Returns:
        Path to config file or None
    """
    candidates = [
        Path.cwd() / "ldeconf.yaml",
        Path.home() / ".ldeconf" / "config.yaml",
    ]

    for path in candidates:
        if path.exists():
            return path

    return None
