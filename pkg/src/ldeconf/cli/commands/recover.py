"""recoverコマンドの実装.

初期条件から解基底を数値的に求め、その基底だけから方程式の係数を復元します。
"""

# ruff: noqa: B008  # Typerの関数呼び出しはデフォルト引数として正常なパターン

from pathlib import Path
from typing import Any

import numpy as np
import typer

from ldeconf.cli.commands.common import (
    ConfigOption,
    DryRunOption,
    VerboseOption,
    cli_errors,
    parse_complex_list,
    prepare,
)
from ldeconf.cli.output import OutputFormatter, format_complex
from ldeconf.lde.equation import LinearODE
from ldeconf.lde.serializers import InitialConditions, ODESerializer
from ldeconf.lde.solver import taylor_solve_basis
from ldeconf.lde.wronskian import kim_recover
from ldeconf.utils.config_loader import SolverConfig
from ldeconf.utils.file_manager import FileManager


def recover_rows(
    ode: LinearODE, ics: InitialConditions, points: list[complex], config: SolverConfig
) -> list[dict[str, Any]]:
    """Recovered and actual coefficients with their relative error at each point."""
    basis = taylor_solve_basis(ode, ics.z0, ics.matrix(), config=config)
    rows = []
    for z in points:
        recovered = np.array(kim_recover(basis, z))
        actual = ode.coefficient_values(z)
        scale = max(float(np.max(np.abs(actual))), 1e-300)
        rows.append(
            {
                "z": z,
                "recovered": recovered.tolist(),
                "actual": actual.tolist(),
                "max_rel_err": float(np.max(np.abs(recovered - actual))) / scale,
            }
        )
    return rows


def recover(
    ode: Path = typer.Option(..., "--ode", help="ODE spec JSON file"),
    ics: Path | None = typer.Option(
        None, "--ics", help="Initial conditions JSON file (identity at 0 by default)"
    ),
    points: str = typer.Option("0.1,0.3j,-0.2+0.2j", "--points", help="Comma-separated points"),
    out: Path | None = typer.Option(None, "--out", help="Output directory"),
    config: Path | None = ConfigOption,
    verbose: bool = VerboseOption,
    dry_run: bool = DryRunOption,
) -> None:
    """Recover the coefficients of an ODE from a numerically solved base.

    Examples:
        $ ldeconf recover --ode poly3.json --points 0.1,0.2j
    """
    formatter = OutputFormatter(verbose=verbose)
    with cli_errors(formatter):
        manager, app_config = prepare(config, verbose)
        spec = ODESerializer.load_ode(ode)
        initial = (
            ODESerializer.load_ics(ics)
            if ics is not None
            else InitialConditions.identity(spec.order)
        )
        if initial.order != spec.order or len(initial.solutions) != spec.order:
            raise ValueError(
                f"ics: expected {spec.order} solutions with {spec.order} values each"
            )
        sample = parse_complex_list(points)
        params = {"ode": str(ode), "ics": str(ics) if ics else None, "points": points}
        if dry_run:
            formatter.print_plan(
                "recover", {**params, "order": spec.order, "solver": app_config.solver.model_dump()}
            )
            raise typer.Exit(0)
        rows = recover_rows(spec.build(), initial, sample, app_config.solver)
        formatter.print_table(
            "Recovered coefficients",
            ["z", "recovered", "actual", "max rel err"],
            [
                [
                    format_complex(row["z"]),
                    ", ".join(format_complex(b) for b in row["recovered"]),
                    ", ".join(format_complex(b) for b in row["actual"]),
                    f"{row['max_rel_err']:.3g}",
                ]
                for row in rows
            ],
        )
        if out is not None:
            files = FileManager(out, overwrite=app_config.output.overwrite)
            lines = ["z_re,z_im,max_rel_err"]
            lines += [
                f"{r['z'].real:.17g},{r['z'].imag:.17g},{r['max_rel_err']:.17g}" for r in rows
            ]
            csv_path = files.save_text("\n".join(lines) + "\n", "recover.csv")
            json_path = files.save_json({"params": params, "rows": rows}, "recover.json")
            record = manager.write_run_record(out, app_config, "recover", params)
            formatter.print_success(
                "Recovery written", {"csv": csv_path, "json": json_path, "run": record}
            )
