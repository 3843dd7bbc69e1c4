"""CLI main entry point.

ldeconf のコマンドラインインターフェースのメインエントリーポイントです。
"""

import typer

from ldeconf.cli.commands.basis import basis
from ldeconf.cli.commands.bell import bell
from ldeconf.cli.commands.example import example
from ldeconf.cli.commands.oscillate import oscillate
from ldeconf.cli.commands.recover import recover
from ldeconf.cli.commands.transform import transform

# Typerアプリケーション
app = typer.Typer(
    name="ldeconf",
    help="Conformal transformation and oscillation of linear differential equations",
    add_completion=False,
    no_args_is_help=True,
)

# サブコマンドの登録
app.command(name="bell")(bell)
app.command(name="transform")(transform)
app.command(name="recover")(recover)
app.command(name="basis")(basis)
app.command(name="oscillate")(oscillate)
app.command(name="example")(example)


@app.command(name="version")
def version() -> None:
    """Show version information.

    Example:
        $ ldeconf version
        ldeconf version 0.1.0
    """
    try:
        import importlib.metadata

        version_str = importlib.metadata.version("ldeconf")
        typer.echo(f"ldeconf version {version_str}")
    except importlib.metadata.PackageNotFoundError:
        # 開発環境でインストールされていない場合
        from ldeconf import __version__

        typer.echo(f"ldeconf version {__version__}")


def main() -> None:
    """CLI entry point."""
    app()


if __name__ == "__main__":
    main()
