"""transformコマンドの実装.

共形写像 T による方程式の変換を行い、円板上の係数 b_j を標本点で出力します。
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
    parse_complex_list,
    parse_map,
    prepare,
)
from ldeconf.cli.output import OutputFormatter, format_complex
from ldeconf.lde.serializers import ODESerializer
from ldeconf.lde.transform import transform_ode, transformed_coefficient_jets
from ldeconf.utils.file_manager import FileManager


def transform_rows(ode_path: Path, map_text: str, points: list[complex]) -> list[dict[str, Any]]:
    """``b_0 .. b_{k-1}`` at each point; the last one is the vanishing diagnostic."""
    ode = ODESerializer.load_ode(ode_path).build()
    T = parse_map(map_text)
    transformed = transform_ode(ode, T)
    rows = []
    for z in points:
        jets = transformed_coefficient_jets(ode, T, z, 0)
        rows.append(
            {
                "z": z,
                "b": [transformed.coeffs[j].value(z) for j in range(ode.order - 1)],
                "b_top": jets[-1].value,
            }
        )
    return rows


def rows_to_csv(rows: list[dict[str, Any]]) -> str:
    count = len(rows[0]["b"])
    header = ["z_re", "z_im"]
    for j in range(count):
        header += [f"b_{j}_re", f"b_{j}_im"]
    header += ["b_top_abs"]
    lines = [",".join(header)]
    for row in rows:
        values = [row["z"].real, row["z"].imag]
        for b in row["b"]:
            values += [b.real, b.imag]
        values.append(abs(row["b_top"]))
        lines.append(",".join(format(v, ".17g") for v in values))
    return "\n".join(lines) + "\n"


def _table_row(row: dict[str, Any]) -> list[str]:
    cells = [format_complex(row["z"]), *(format_complex(b) for b in row["b"])]
    return [*cells, f"{abs(row['b_top']):.3g}"]


def transform(
    map_spec: str = typer.Option(..., "--map", help="Map spec as JSON or a JSON file"),
    ode: Path = typer.Option(..., "--ode", help="ODE spec JSON file"),
    points: str = typer.Option("0,0.5,0.5j,-0.5", "--points", help="Comma-separated points"),
    out: Path | None = typer.Option(None, "--out", help="Output directory"),
    config: Path | None = ConfigOption,
    verbose: bool = VerboseOption,
    dry_run: bool = DryRunOption,
) -> None:
    """Transform an ODE on T(D) to the unit disc and evaluate its coefficients.

    Examples:
        $ ldeconf transform --map '{"kind": "sector", "alpha": 1.5}' --ode const2.json
    """
    formatter = OutputFormatter(verbose=verbose)
    with cli_errors(formatter):
        manager, app_config = prepare(config, verbose)
        sample = parse_complex_list(points)
        spec = ODESerializer.load_ode(ode)
        T = parse_map(map_spec)
        params = {"map": T.model_dump(mode="json"), "ode": str(ode), "points": points}
        if dry_run:
            formatter.print_plan("transform", {**params, "order": spec.order})
            raise typer.Exit(0)
        rows = transform_rows(ode, map_spec, sample)
        formatter.print_table(
            f"Transformed coefficients ({T.describe()})",
            ["z", *(f"b_{j}" for j in range(spec.order - 1)), "|b_(k-1)|"],
            [_table_row(row) for row in rows],
        )
        if out is not None:
            files = FileManager(out, overwrite=app_config.output.overwrite)
            csv_path = files.save_text(rows_to_csv(rows), "transform.csv")
            json_path = files.save_json({"params": params, "rows": rows}, "transform.json")
            record = manager.write_run_record(out, app_config, "transform", params)
            formatter.print_success(
                "Transformation written", {"csv": csv_path, "json": json_path, "run": record}
            )
