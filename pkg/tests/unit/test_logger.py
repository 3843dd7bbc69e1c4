"""Unit tests for logging setup."""

import json

import pytest

from ldeconf.utils.logger import get_logger, setup_logger

pytestmark = pytest.mark.unit


class TestLogger:
    """Tests for structlog configuration."""

    def test_json_records_on_stderr(self, capsys):
        """JSON records carry the event and bound name."""
        setup_logger("INFO", "json")

        get_logger("ldeconf.test").info("report_written", rows=3)

        captured = capsys.readouterr()
        record = json.loads(captured.err.strip().splitlines()[-1])
        assert record["event"] == "report_written"
        assert record["logger_name"] == "ldeconf.test"
        assert record["rows"] == 3
        assert captured.out == ""

    def test_level_filter(self, capsys):
        """Records below the level are dropped."""
        setup_logger("WARNING", "console")

        get_logger().info("hidden_event")
        get_logger().warning("shown_event")

        err = capsys.readouterr().err
        assert "hidden_event" not in err
        assert "shown_event" in err
