"""exampleコマンドの実装.

名前付きプリセット（petal51, expsum52, schwarz2, kim-roundtrip）を実行します。
"""

# ruff: noqa: B008  # Typerの関数呼び出しはデフォルト引数として正常なパターン

from pathlib import Path

import typer

from ldeconf.cli.commands.common import (
    ConfigOption,
    DryRunOption,
    VerboseOption,
    cli_errors,
    prepare,
    resolve_output_dir,
)
from ldeconf.cli.output import OutputFormatter
from ldeconf.workflows.exceptions import WorkflowValidationError
from ldeconf.workflows.presets import PRESETS, run_preset, validate_params


def example(
    name: str = typer.Option(..., "--name", help=f"Preset: {', '.join(PRESETS)}"),
    alpha: float | None = typer.Option(None, "--alpha", help="Family or sector exponent"),
    rmax: float | None = typer.Option(None, "--rmax", help="Largest report radius"),
    out: Path | None = typer.Option(None, "--out", help="Output directory"),
    points: int | None = typer.Option(None, "--points", help="Number of report radii"),
    seed: int | None = typer.Option(None, "--seed", help="Random seed (kim-roundtrip)"),
    config: Path | None = ConfigOption,
    verbose: bool = VerboseOption,
    dry_run: bool = DryRunOption,
) -> None:
    """Run a named experiment preset and write its CSV/JSON artifacts.

    Examples:
        $ ldeconf example --name petal51 --alpha 1.5 --rmax 0.99 --out out/
    """
    formatter = OutputFormatter(verbose=verbose)
    with cli_errors(formatter):
        manager, app_config = prepare(config, verbose)
        if name not in PRESETS:
            raise WorkflowValidationError(
                f"Unknown preset: {name}", validation_errors=[f"choose from {list(PRESETS)}"]
            )
        params = {"alpha": alpha, "rmax": rmax, "points": points, "seed": seed}
        resolved = validate_params(params).model_dump()
        output_dir = resolve_output_dir(out, app_config)
        if dry_run:
            formatter.print_plan(
                "example", {"name": name, "out": str(output_dir), "params": resolved}
            )
            raise typer.Exit(0)
        formatter.print_header()
        paths = run_preset(name, app_config, output_dir, **params)
        record = manager.write_run_record(
            output_dir, app_config, "example", {"name": name, **resolved}
        )
        formatter.print_success(
            f"Preset {name} finished",
            {path.name: path for path in [*paths, record]},
        )
