"""Output file management."""

import json
from pathlib import Path
from typing import Any

from ldeconf.utils.logger import get_logger

logger = get_logger(__name__)


class FileManager:
    """Writes run artifacts below a single output directory."""

    def __init__(self, output_base_dir: str | Path | None = None, overwrite: bool = True) -> None:
        """
        Initialize file manager.

        Args:
            output_base_dir: Base directory for artifacts. If None, uses cwd.
                All save operations are restricted to this directory.
            overwrite: Whether existing artifacts may be replaced.
        """
        self._output_base_dir = Path(output_base_dir) if output_base_dir else Path.cwd()
        self.overwrite = overwrite
        logger.debug("file_manager_initialized", output_base_dir=str(self._output_base_dir))

    @property
    def output_base_dir(self) -> Path:
        """Get output base directory path."""
        return self._output_base_dir

    def _validate_output_path(self, output_path: str | Path) -> Path:
        """
        Resolve an artifact path inside the output directory.

        Args:
            output_path: Artifact path, relative to output_base_dir or absolute

        Returns:
            Validated resolved path

        Raises:
            ValueError: If output_path escapes output_base_dir
            FileExistsError: If the file exists and overwrite is disabled
        """
        path = Path(output_path)
        if not path.is_absolute():
            path = self._output_base_dir / path

        try:
            resolved_path = path.resolve()
            resolved_path.relative_to(self._output_base_dir.resolve())
        except (ValueError, RuntimeError) as e:
            logger.error(
                "path_outside_output_dir",
                output_path=str(output_path),
                base_dir=str(self._output_base_dir),
            )
            raise ValueError(
                f"Path '{output_path}' escapes base directory '{self._output_base_dir}'"
            ) from e

        if resolved_path.exists() and not self.overwrite:
            raise FileExistsError(f"Artifact exists and overwrite is disabled: {resolved_path}")
        return resolved_path

    def save_text(self, content: str, output_path: str | Path) -> Path:
        """Write text to an artifact path and return the resolved path."""
        resolved_path = self._validate_output_path(output_path)
        resolved_path.parent.mkdir(parents=True, exist_ok=True)
        resolved_path.write_text(content, encoding="utf-8")
        logger.info("artifact_saved", path=str(resolved_path))
        return resolved_path

    def save_json(self, data: Any, output_path: str | Path) -> Path:
        """Write data as indented JSON; complex numbers become ``[re, im]``."""
        text = json.dumps(data, indent=2, default=_json_default, sort_keys=False)
        return self.save_text(text + "\n", output_path)


def _json_default(value: Any) -> Any:
    if isinstance(value, complex):
        return [value.real, value.imag]
    if isinstance(value, Path):
        return str(value)
    if hasattr(value, "tolist"):
        return value.tolist()
    if hasattr(value, "model_dump"):
        return value.model_dump(mode="json")
    raise TypeError(f"Object of type {type(value).__name__} is not JSON serializable")
