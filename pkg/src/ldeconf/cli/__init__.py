"""CLI module for ldeconf.

コマンドラインインターフェースモジュールです。
"""

from ldeconf.cli.config import ConfigManager
from ldeconf.cli.main import app, main, version
from ldeconf.cli.output import OutputFormatter

__all__ = [
    "app",
    "main",
    "version",
    "ConfigManager",
    "OutputFormatter",
]
