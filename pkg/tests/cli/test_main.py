"""Tests for CLI main entry point."""

import pytest
from typer.testing import CliRunner

from ldeconf.cli.main import app, main

pytestmark = pytest.mark.unit

SUBCOMMANDS = ["bell", "transform", "recover", "basis", "oscillate", "example", "version"]


class TestCLIMain:
    """Tests for CLI main module."""

    def test_app_name(self) -> None:
        """The Typer app is named after the package."""
        assert app.info.name == "ldeconf"

    def test_app_help(self) -> None:
        """Help lists every subcommand."""
        result = CliRunner().invoke(app, ["--help"])

        assert result.exit_code == 0
        for name in SUBCOMMANDS:
            assert name in result.stdout

    def test_version_command(self) -> None:
        """version prints the package version."""
        result = CliRunner().invoke(app, ["version"])

        assert result.exit_code == 0
        assert "ldeconf version" in result.stdout

    def test_main_entry_point(self) -> None:
        """main() is callable."""
        assert callable(main)

    def test_no_args_shows_help(self) -> None:
        """Running without arguments shows usage."""
        result = CliRunner().invoke(app, [])

        # no_args_is_help は UsageError として終了コード 2 を返す
        assert result.exit_code in (0, 2)
        assert "Usage" in result.output
