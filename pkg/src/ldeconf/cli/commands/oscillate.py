"""oscillateコマンドの実装.

係数積分とゼロ点の計数関数を比較する振動レポートを作成し、CSV/JSON に書き出します。
"""

# ruff: noqa: B008  # Typerの関数呼び出しはデフォルト引数として正常なパターン

from pathlib import Path

import typer

from ldeconf.cli.commands.common import (
    ConfigOption,
    DryRunOption,
    VerboseOption,
    cli_errors,
    parse_map,
    parse_radial_grid,
    prepare,
    resolve_output_dir,
)
from ldeconf.cli.output import OutputFormatter
from ldeconf.lde.serializers import InitialConditions, ODESerializer
from ldeconf.lde.solver import taylor_solve_basis
from ldeconf.oscillation.report import OscillationReport, exponent_summary, theorem2_report
from ldeconf.utils.file_manager import FileManager


def print_report(formatter: OutputFormatter, report: OscillationReport) -> None:
    columns = ["r", *(f"I_{j}" for j in range(report.order - 1)), "rhs", "ratio", "cor_ratio"]
    rows = [
        [
            f"{row.r:.6g}",
            *(f"{value:.4g}" for value in row.integrals),
            f"{row.rhs:.4g}",
            f"{row.ratio:.4g}",
            f"{row.cor_ratio:.4g}",
        ]
        for row in report.rows
    ]
    formatter.print_table(f"Oscillation report ({report.map_description})", columns, rows)


def oscillate(
    map_spec: str = typer.Option(..., "--map", help="Map spec as JSON or a JSON file"),
    ode: Path = typer.Option(..., "--ode", help="ODE spec JSON file"),
    ics: Path | None = typer.Option(
        None, "--ics", help="Initial conditions JSON file (identity at T(0) by default)"
    ),
    rgrid: str = typer.Option(
        "0.5:0.99:16", "--rgrid", help="r_min:r_max:count or comma-separated radii"
    ),
    shrink_b: float | None = typer.Option(None, "--shrink-b", help="b in s(r) = 1 - b(1 - r)"),
    out: Path | None = typer.Option(None, "--out", help="Output directory"),
    config: Path | None = ConfigOption,
    verbose: bool = VerboseOption,
    dry_run: bool = DryRunOption,
) -> None:
    """Compare coefficient growth with zero distribution of a solution base.

    Examples:
        $ ldeconf oscillate --map '{"kind": "sector", "alpha": 1.5}' --ode expsum.json --out out/
    """
    formatter = OutputFormatter(verbose=verbose)
    with cli_errors(formatter):
        manager, app_config = prepare(config, verbose, {"report": {"shrink_b": shrink_b}})
        spec = ODESerializer.load_ode(ode)
        T = parse_map(map_spec)
        grid = parse_radial_grid(rgrid, app_config.report.shrink_b)
        center = complex(T.eval_array(0.0))
        initial = (
            ODESerializer.load_ics(ics)
            if ics is not None
            else InitialConditions.identity(spec.order, center)
        )
        if initial.order != spec.order or len(initial.solutions) != spec.order:
            raise ValueError(f"ics: expected {spec.order} solutions with {spec.order} values each")
        output_dir = resolve_output_dir(out, app_config)
        params = {
            "map": T.model_dump(mode="json"),
            "ode": str(ode),
            "ics": str(ics) if ics else None,
            "rgrid": grid.radii,
            "shrink_b": grid.shrink_b,
        }
        if dry_run:
            formatter.print_plan(
                "oscillate",
                {
                    **params,
                    "out": str(output_dir),
                    "quadrature": app_config.quadrature.model_dump(),
                    "counting": app_config.counting.model_dump(),
                },
            )
            raise typer.Exit(0)
        ode_model = spec.build()
        base = taylor_solve_basis(
            ode_model, initial.z0, initial.matrix(), config=app_config.solver
        )
        report = theorem2_report(base, T, ode_model, grid, app_config)
        print_report(formatter, report)
        files = FileManager(output_dir, overwrite=app_config.output.overwrite)
        csv_path = files.save_text(report.to_csv(), "oscillation.csv")
        json_path = files.save_text(report.to_json(), "oscillation.json")
        record = manager.write_run_record(output_dir, app_config, "oscillate", params)
        formatter.print_success(
            "Oscillation report written",
            {"csv": csv_path, "json": json_path, "run": record, **exponent_summary(report)},
        )
