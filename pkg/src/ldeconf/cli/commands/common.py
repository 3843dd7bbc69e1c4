"""Options and helpers shared by the subcommands.

入力の解析、設定の解決、例外から終了コードへの変換を提供します。
Exit codes: 0 success, 1 numerical failure, 2 invalid input or configuration.
"""

# ruff: noqa: B008  # Typerの関数呼び出しはデフォルト引数として正常なパターン

from __future__ import annotations

import json
from collections.abc import Iterator
from contextlib import contextmanager
from pathlib import Path
from typing import Any

import structlog
import typer
from pydantic import TypeAdapter, ValidationError

from ldeconf.cli.config import ConfigLoadError, ConfigManager, ConfigValidationError
from ldeconf.cli.output import OutputFormatter
from ldeconf.conformal.exceptions import ConformalMapError
from ldeconf.conformal.maps import ConformalMapBase, parse_map_spec
from ldeconf.core.types import parse_complex
from ldeconf.jetcalc.exceptions import BellIndexError, JetError
from ldeconf.lde.exceptions import LDEError
from ldeconf.lde.serializers import CoefficientSpec
from ldeconf.oscillation.exceptions import OscillationError
from ldeconf.oscillation.report import RadialGrid
from ldeconf.utils.config_loader import AppConfig
from ldeconf.utils.logger import setup_logger
from ldeconf.workflows.exceptions import WorkflowStepError, WorkflowValidationError

logger = structlog.get_logger(__name__)

EXIT_NUMERIC = 1
EXIT_VALIDATION = 2

NUMERIC_ERRORS: tuple[type[Exception], ...] = (
    JetError,
    ConformalMapError,
    LDEError,
    OscillationError,
    WorkflowStepError,
)
VALIDATION_ERRORS: tuple[type[Exception], ...] = (
    BellIndexError,
    ValidationError,
    ConfigLoadError,
    ConfigValidationError,
    WorkflowValidationError,
    FileNotFoundError,
    ValueError,
)

ConfigOption = typer.Option(None, "--config", "-c", help="Config file path (YAML or JSON)")
VerboseOption = typer.Option(False, "--verbose", "-v", help="Verbose output")
DryRunOption = typer.Option(
    False, "--dry-run", help="Validate inputs and print the resolved plan without computing"
)

_COEFFICIENT_ADAPTER: TypeAdapter[Any] = TypeAdapter(CoefficientSpec)


def _describe(error: Exception) -> str:
    if isinstance(error, ValidationError):
        return "; ".join(
            f"{'.'.join(str(part) for part in err['loc']) or 'input'}: {err['msg']}"
            for err in error.errors()
        )
    return str(error)


@contextmanager
def cli_errors(formatter: OutputFormatter) -> Iterator[None]:
    """Translate module errors into exit codes 1 and validation errors into 2."""
    try:
        yield
    except typer.Exit:
        raise
    except VALIDATION_ERRORS as e:
        formatter.print_error(f"Validation error: {_describe(e)}")
        logger.error("validation_error", error=_describe(e), error_type=type(e).__name__)
        raise typer.Exit(EXIT_VALIDATION) from e
    except NUMERIC_ERRORS as e:
        formatter.print_error("Numerical failure", error=e, show_traceback=True)
        logger.error("numerical_failure", error=str(e), error_type=type(e).__name__)
        raise typer.Exit(EXIT_NUMERIC) from e


def prepare(
    config_path: Path | None,
    verbose: bool,
    overrides: dict[str, dict[str, Any]] | None = None,
) -> tuple[ConfigManager, AppConfig]:
    """Load the config file, apply flag overrides and configure logging."""
    manager = ConfigManager()
    config = manager.load_app_config(config_path)
    if overrides:
        config = manager.apply_overrides(config, overrides)
    level = "DEBUG" if verbose else config.logging.level
    setup_logger(level, config.logging.format)
    return manager, config


def _read_json_argument(value: str) -> Any:
    """JSON given inline or as a path to a JSON file."""
    text = value.strip()
    if not text.startswith(("{", "[")):
        path = Path(text)
        if not path.exists():
            raise FileNotFoundError(f"File not found: {path}")
        text = path.read_text(encoding="utf-8")
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ValueError(f"Invalid JSON: {e.msg} at line {e.lineno}, column {e.colno}") from e


def parse_map(value: str) -> ConformalMapBase:
    """Map spec from inline JSON or a JSON file."""
    return parse_map_spec(_read_json_argument(value))


def parse_coefficient(value: str) -> Any:
    """Coefficient spec from inline JSON, a JSON file or a plain number."""
    try:
        return _COEFFICIENT_ADAPTER.validate_python(
            {"kind": "constant", "value": parse_complex(value)}
        )
    except ValueError:
        return _COEFFICIENT_ADAPTER.validate_python(_read_json_argument(value))


def parse_complex_list(value: str) -> list[complex]:
    """Comma-separated complex numbers such as ``0,0.5,0.2+0.3j``."""
    items = [item for item in value.split(",") if item.strip()]
    if not items:
        raise ValueError("expected at least one value")
    return [parse_complex(item.strip()) for item in items]


def parse_radial_grid(value: str, shrink_b: float) -> RadialGrid:
    """``r_min:r_max:count`` (geometric in ``1 - r``) or a comma-separated list."""
    if ":" in value:
        parts = value.split(":")
        if len(parts) != 3:
            raise ValueError("rgrid range must look like r_min:r_max:count")
        return RadialGrid.geometric(float(parts[0]), float(parts[1]), int(parts[2]), shrink_b)
    radii = [float(item) for item in value.split(",") if item.strip()]
    return RadialGrid(radii=radii, shrink_b=shrink_b)


def resolve_output_dir(out: Path | None, config: AppConfig) -> Path:
    return out if out is not None else Path(config.output.directory)
