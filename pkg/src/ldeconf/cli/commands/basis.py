"""basisコマンドの実装.

f'' + a f = 0 の2解のべき積が満たす k 階方程式の係数と、
ロンスキアン恒等式の検証結果を出力します。
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
    parse_coefficient,
    parse_complex_list,
    prepare,
)
from ldeconf.cli.output import OutputFormatter, format_complex
from ldeconf.conformal.domains import parse_domain
from ldeconf.lde.wronskian import (
    power_basis,
    power_products,
    solve_pair,
    wronskian,
    wronskian_constant,
    wronskian_exponent,
)
from ldeconf.utils.config_loader import SolverConfig
from ldeconf.utils.file_manager import FileManager


def basis_rows(
    spec: Any, k: int, domain_text: str, points: list[complex], config: SolverConfig
) -> list[dict[str, Any]]:
    """Power-basis coefficients and the Wronskian identity at each point."""
    a = spec.build(parse_domain(domain_text))
    ode, _ = power_basis(a, k, config=config)
    f1, f2 = solve_pair(a, config=config)
    products = power_products(f1, f2, k)
    rows = []
    for z in points:
        lhs = wronskian(products, z)
        rhs = complex(wronskian_constant(k) * wronskian([f1, f2], z) ** wronskian_exponent(k))
        rows.append(
            {
                "z": z,
                "coefficients": ode.coefficient_values(z).tolist(),
                "wronskian": lhs,
                "identity_rel_err": abs(lhs - rhs) / abs(rhs) if rhs != 0 else abs(lhs),
            }
        )
    return rows


def basis(
    a: str = typer.Option(..., "--a", help="Coefficient a: number, JSON spec or JSON file"),
    k: int = typer.Option(..., "--k", min=2, max=8, help="Order of the power basis"),
    out: Path | None = typer.Option(None, "--out", help="Output directory"),
    domain: str = typer.Option("plane", "--domain", help="Domain kind of a"),
    points: str = typer.Option("0,0.3,0.2j", "--points", help="Comma-separated points"),
    config: Path | None = ConfigOption,
    verbose: bool = VerboseOption,
    dry_run: bool = DryRunOption,
) -> None:
    """Build the order-k equation of the power products of two solutions.

    Examples:
        $ ldeconf basis --a 1 --k 3
    """
    formatter = OutputFormatter(verbose=verbose)
    with cli_errors(formatter):
        manager, app_config = prepare(config, verbose)
        spec = parse_coefficient(a)
        parse_domain(domain)
        sample = parse_complex_list(points)
        params = {"a": spec.model_dump(mode="json"), "k": k, "domain": domain, "points": points}
        if dry_run:
            formatter.print_plan("basis", params)
            raise typer.Exit(0)
        rows = basis_rows(spec, k, domain, sample, app_config.solver)
        formatter.print_table(
            f"Power basis coefficients (k={k})",
            ["z", *(f"a_{j}" for j in range(k - 1)), "W", "identity rel err"],
            [
                [
                    format_complex(row["z"]),
                    *(format_complex(c) for c in row["coefficients"]),
                    format_complex(row["wronskian"]),
                    f"{row['identity_rel_err']:.3g}",
                ]
                for row in rows
            ],
        )
        if out is not None:
            files = FileManager(out, overwrite=app_config.output.overwrite)
            json_path = files.save_json({"params": params, "rows": rows}, "basis.json")
            record = manager.write_run_record(out, app_config, "basis", params)
            formatter.print_success("Power basis written", {"json": json_path, "run": record})
