"""Unit tests for FileManager."""

import json

import numpy as np
import pytest

from ldeconf.utils.file_manager import FileManager

pytestmark = pytest.mark.unit


class TestFileManager:
    """Tests for FileManager."""

    def test_default_base_is_cwd(self, tmp_path, monkeypatch):
        """Without a base directory artifacts go to the cwd."""
        monkeypatch.chdir(tmp_path)

        assert FileManager().output_base_dir == tmp_path

    def test_save_text_creates_directories(self, tmp_path):
        """Nested artifact paths are created."""
        fm = FileManager(tmp_path / "out")

        path = fm.save_text("r,ratio\n", "nested/report.csv")

        assert path.read_text(encoding="utf-8") == "r,ratio\n"
        assert path.parent.name == "nested"

    def test_save_json_complex_and_arrays(self, tmp_path):
        """Complex numbers become pairs and arrays become lists."""
        fm = FileManager(tmp_path)

        path = fm.save_json({"z": 1 - 2j, "values": np.array([1.0, 2.0])}, "data.json")

        data = json.loads(path.read_text(encoding="utf-8"))
        assert data == {"z": [1.0, -2.0], "values": [1.0, 2.0]}

    def test_save_json_unknown_type(self, tmp_path):
        """Objects without a JSON form are rejected."""
        with pytest.raises(TypeError):
            FileManager(tmp_path).save_json({"x": object()}, "bad.json")

    def test_path_escaping_base(self, tmp_path):
        """Artifacts stay inside the output directory."""
        fm = FileManager(tmp_path / "out")

        with pytest.raises(ValueError, match="escapes base directory"):
            fm.save_text("x", "../outside.txt")

    def test_no_overwrite(self, tmp_path):
        """Existing artifacts are kept when overwriting is disabled."""
        fm = FileManager(tmp_path, overwrite=False)
        fm.save_text("first", "report.csv")

        with pytest.raises(FileExistsError):
            fm.save_text("second", "report.csv")

    def test_overwrite(self, tmp_path):
        """Overwriting is the default."""
        fm = FileManager(tmp_path)
        fm.save_text("first", "report.csv")

        path = fm.save_text("second", "report.csv")

        assert path.read_text(encoding="utf-8") == "second"
