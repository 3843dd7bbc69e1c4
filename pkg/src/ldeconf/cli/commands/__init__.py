"""CLIコマンドのエクスポート."""

from ldeconf.cli.commands.basis import basis
from ldeconf.cli.commands.bell import bell
from ldeconf.cli.commands.example import example
from ldeconf.cli.commands.oscillate import oscillate
from ldeconf.cli.commands.recover import recover
from ldeconf.cli.commands.transform import transform

__all__ = [
    "basis",
    "bell",
    "example",
    "oscillate",
    "recover",
    "transform",
]
