"""bellコマンドの実装.

不完全指数ベル多項式 B_{i,n} の値を標準出力に表示します。
"""

# ruff: noqa: B008  # Typerの関数呼び出しはデフォルト引数として正常なパターン

from pathlib import Path
from typing import Any

import typer

from ldeconf.cli.commands.common import (
    ConfigOption,
    DryRunOption,
    VerboseOption,
    cli_errors,
    prepare,
)
from ldeconf.cli.output import OutputFormatter, format_complex
from ldeconf.core.types import parse_complex
from ldeconf.jetcalc.bell import bell_polynomial


def parse_bell_args(value: str) -> list[Any]:
    """Integers stay exact; anything else is read as a complex number."""
    args: list[Any] = []
    for item in value.split(","):
        item = item.strip()
        if not item:
            continue
        try:
            args.append(int(item))
        except ValueError:
            args.append(parse_complex(item))
    return args


def bell(
    i: int = typer.Option(..., "--i", help="Derivative order i"),
    n: int = typer.Option(..., "--n", help="Number of blocks n"),
    args: str = typer.Option(..., "--args", help="Comma-separated z_1, ..., z_{i-n+1}"),
    config: Path | None = ConfigOption,
    verbose: bool = VerboseOption,
    dry_run: bool = DryRunOption,
) -> None:
    """Evaluate the incomplete exponential Bell polynomial B_{i,n}.

    Examples:
        $ ldeconf bell --i 4 --n 2 --args 1,1,1
        7
    """
    formatter = OutputFormatter(verbose=verbose)
    with cli_errors(formatter):
        prepare(config, verbose)
        values = parse_bell_args(args)
        if dry_run:
            formatter.print_plan("bell", {"i": i, "n": n, "args": [str(v) for v in values]})
            raise typer.Exit(0)
        result = bell_polynomial(i, n, values)
        typer.echo(str(result) if isinstance(result, int) else format_complex(result, 17))
