"""Coefficient-growth versus zero-distribution report on a radial grid.

For a solution base ``g_1, ..., g_k`` on the disc each grid radius gets

- ``I_j(r)``: coefficient integrals of the original equation through T
- ``rhs_N_sum = sum_j int_0^{s(r)} N(t, 0, g_j) / (1 - t) dt``
- ``rhs_cross_sum = sum_{j<k} int_0^{s(r)} N(t, 0, g_j + g_k) / (1 - t) dt``
- ``log2_term = log(e / (1 - r))^2``
- ``ratio = max_j I_j / (rhs_N_sum + rhs_cross_sum + log2_term)``

and the pointwise variant with ``N(s(r))`` sums against ``log(e / (1 - r))``
in the ``cor_*`` columns.
"""

from __future__ import annotations

import csv
import io
import json
import math
from collections.abc import Callable, Sequence
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Any, Self, TypeVar

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from ldeconf.conformal.maps import ConformalMapBase
from ldeconf.lde.equation import LinearODE
from ldeconf.lde.functions import Evaluator
from ldeconf.lde.transform import pushforward_solution
from ldeconf.oscillation.counting import (
    CountingFunction,
    count_on_grid,
    count_zeros,
    counting_grid,
)
from ldeconf.oscillation.exceptions import OscillationError
from ldeconf.oscillation.fitting import windowed_exponent
from ldeconf.oscillation.quadrature import coefficient_integral
from ldeconf.utils.config_loader import AppConfig
from ldeconf.utils.logger import get_logger

logger = get_logger(__name__)

T_ = TypeVar("T_")
R_ = TypeVar("R_")

# Radius used to detect a zero of a solution at the origin.
ORIGIN_PROBE = 1e-3


class RadialGrid(BaseModel):
    """Radii of a report and the shrink parameter of ``s(r) = 1 - b (1 - r)``."""

    model_config = ConfigDict(frozen=True)

    radii: list[float] = Field(..., min_length=1, description="Increasing radii in (0, 1)")
    shrink_b: float = Field(default=0.5, gt=0.0, lt=1.0, description="b in s(r)")

    @model_validator(mode="after")
    def _check(self) -> Self:
        if any(not 0 < r < 1 for r in self.radii):
            raise ValueError("grid radii must lie in (0, 1)")
        if any(b <= a for a, b in zip(self.radii, self.radii[1:], strict=False)):
            raise ValueError("grid radii must be strictly increasing")
        return self

    def s(self, r: float) -> float:
        return 1.0 - self.shrink_b * (1.0 - r)

    @classmethod
    def geometric(
        cls, r_min: float, r_max: float, count: int, shrink_b: float = 0.5
    ) -> RadialGrid:
        """Radii with ``1 - r`` geometrically spaced from ``1 - r_min`` to ``1 - r_max``."""
        if count < 2 or not 0 < r_min < r_max < 1:
            raise ValueError("geometric grid needs 0 < r_min < r_max < 1 and count >= 2")
        gaps = np.geomspace(1 - r_min, 1 - r_max, count)
        return cls(radii=[float(1 - g) for g in gaps], shrink_b=shrink_b)


class ReportRow(BaseModel):
    """One grid radius of an oscillation report."""

    r: float
    s_r: float
    integrals: list[float] = Field(..., description="I_0 .. I_{k-2}")
    rhs_N_sum: float = Field(..., ge=0.0)
    rhs_cross_sum: float = Field(..., ge=0.0)
    log2_term: float = Field(..., ge=0.0)
    ratio: float
    cor_N_sum: float = Field(..., ge=0.0)
    cor_cross_sum: float = Field(..., ge=0.0)
    cor_log_term: float = Field(..., ge=0.0)
    cor_lhs: float
    cor_ratio: float

    @property
    def lhs(self) -> float:
        return max(self.integrals)

    @property
    def rhs(self) -> float:
        return self.rhs_N_sum + self.rhs_cross_sum + self.log2_term


class OscillationReport(BaseModel):
    """Report rows plus the counting functions and fitted exponents behind them."""

    order: int = Field(..., ge=2, description="ODE order k")
    map_description: str = Field(default="", description="Map the base was pushed through")
    grid: RadialGrid
    rows: list[ReportRow]
    counting: dict[str, CountingFunction] = Field(default_factory=dict)
    exponents: dict[str, float | None] = Field(default_factory=dict)

    @model_validator(mode="after")
    def _check_finite(self) -> Self:
        for row in self.rows:
            values = [*row.integrals, row.rhs_N_sum, row.rhs_cross_sum, row.log2_term, row.ratio]
            if not all(math.isfinite(v) for v in values):
                raise ValueError(f"report row at r={row.r} has non-finite entries")
        return self

    def columns(self) -> list[str]:
        return [
            "r",
            "s_r",
            *(f"I_{j}" for j in range(self.order - 1)),
            "rhs_N_sum",
            "rhs_cross_sum",
            "log2_term",
            "ratio",
            "cor_N_sum",
            "cor_cross_sum",
            "cor_log_term",
            "cor_lhs",
            "cor_ratio",
        ]

    def column(self, name: str) -> list[float]:
        """Values of a CSV column."""
        if name.startswith("I_"):
            index = int(name[2:])
            return [row.integrals[index] for row in self.rows]
        return [float(getattr(row, name)) for row in self.rows]

    def to_csv(self, path: str | Path | None = None) -> str:
        """CSV text with ``.17g`` numbers; written to path when given."""
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(self.columns())
        for row in self.rows:
            values = [
                row.r,
                row.s_r,
                *row.integrals,
                row.rhs_N_sum,
                row.rhs_cross_sum,
                row.log2_term,
                row.ratio,
                row.cor_N_sum,
                row.cor_cross_sum,
                row.cor_log_term,
                row.cor_lhs,
                row.cor_ratio,
            ]
            writer.writerow([format(v, ".17g") for v in values])
        text = buffer.getvalue()
        if path is not None:
            Path(path).parent.mkdir(parents=True, exist_ok=True)
            Path(path).write_text(text, encoding="utf-8")
        return text

    def to_json(self, path: str | Path | None = None, indent: int = 2) -> str:
        text = self.model_dump_json(indent=indent)
        if path is not None:
            Path(path).parent.mkdir(parents=True, exist_ok=True)
            Path(path).write_text(text, encoding="utf-8")
        return text

    @classmethod
    def from_json(cls, source: str | Path) -> OscillationReport:
        """Load a report from JSON text or a file path.

        Raises:
            FileNotFoundError: A path that does not exist
            ValueError: Invalid JSON or report schema
        """
        if isinstance(source, Path) or not source.lstrip().startswith("{"):
            path = Path(source)
            if not path.exists():
                raise FileNotFoundError(f"Report file not found: {path}")
            source = path.read_text(encoding="utf-8")
        try:
            data = json.loads(source)
        except json.JSONDecodeError as e:
            raise ValueError(f"Invalid report JSON: {e}") from e
        return cls.model_validate(data)


def _map(func: Callable[[T_], R_], items: Sequence[T_], workers: int) -> list[R_]:
    """Ordered map, threaded when more than one worker is allowed."""
    if workers <= 1 or len(items) <= 1:
        return [func(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, items))


def origin_multiplicity(g: Evaluator, config: AppConfig) -> int:
    """Order of the zero of g at 0; 0 when g(0) != 0."""
    value = complex(g.values(np.array([0j]))[0])
    if value != 0 and math.isfinite(abs(value)):
        return 0
    n0 = count_zeros(g, ORIGIN_PROBE, config.counting)
    logger.warning("solution_vanishes_at_origin", multiplicity=n0)
    return n0


def theorem2_report(
    base: Sequence[Evaluator],
    T: ConformalMapBase,
    ode: LinearODE,
    grid: RadialGrid,
    config: AppConfig | None = None,
    pushed: bool = False,
) -> OscillationReport:
    """Coefficient integrals against zero-counting sums on a radial grid.

    Args:
        base: k linearly independent solutions of ``ode``, on ``T(D)`` or
            already pushed to the disc
        T: Map of the disc onto the region of interest
        ode: Equation whose coefficients enter ``I_j`` through T
        grid: Report radii and shrink parameter
        config: Numeric settings
        pushed: The base is already on the disc

    Raises:
        OscillationError: Base size differs from the order
        ZeroCountingError: A zero count did not settle
        QuadratureConvergenceError: A coefficient integral did not converge
    """
    cfg = config or AppConfig()
    k = ode.order
    if len(base) != k:
        raise OscillationError("Base size must equal the ODE order", {"k": k, "given": len(base)})
    disc = list(base) if pushed else [pushforward_solution(f, T, k) for f in base]
    last = disc[-1]
    functions: dict[str, Evaluator] = {f"g_{j + 1}": g for j, g in enumerate(disc)}
    for j in range(k - 1):
        functions[f"g_{j + 1}+g_{k}"] = disc[j] + last
    workers = cfg.report.max_workers
    radii = counting_grid(grid.radii, grid.shrink_b, cfg.report.counting_points)

    def count(name: str) -> CountingFunction:
        g = functions[name]
        cf = count_on_grid(g, radii, cfg.counting, origin_multiplicity(g, cfg))
        logger.debug("counting_function_ready", function=name, zeros=cf.counts[-1])
        return cf

    names = list(functions)
    counting = dict(zip(names, _map(count, names, workers), strict=True))

    def integrals(r: float) -> list[float]:
        return [
            coefficient_integral(ode.coeffs[j], j, r, k, T, cfg.quadrature) for j in range(k - 1)
        ]

    all_integrals = _map(integrals, grid.radii, workers)
    singles = [counting[f"g_{j + 1}"] for j in range(k)]
    crosses = [counting[f"g_{j + 1}+g_{k}"] for j in range(k - 1)]
    rows = []
    for r, values in zip(grid.radii, all_integrals, strict=True):
        s = grid.s(r)
        log_term = math.log(math.e / (1 - r))
        lhs = max(values)
        n_sum = sum(cf.integral_over_one_minus_t(s) for cf in singles)
        cross_sum = sum(cf.integral_over_one_minus_t(s) for cf in crosses)
        cor_n = sum(cf.counting(s) for cf in singles)
        cor_cross = sum(cf.counting(s) for cf in crosses)
        rows.append(
            ReportRow(
                r=r,
                s_r=s,
                integrals=values,
                rhs_N_sum=max(n_sum, 0.0),
                rhs_cross_sum=max(cross_sum, 0.0),
                log2_term=log_term**2,
                ratio=lhs / (max(n_sum, 0.0) + max(cross_sum, 0.0) + log_term**2),
                cor_N_sum=max(cor_n, 0.0),
                cor_cross_sum=max(cor_cross, 0.0),
                cor_log_term=log_term,
                cor_lhs=lhs / log_term,
                cor_ratio=(lhs / log_term) / (max(cor_n, 0.0) + max(cor_cross, 0.0) + log_term),
            )
        )
    report = OscillationReport(
        order=k,
        map_description=T.describe(),
        grid=grid,
        rows=rows,
        counting=counting,
    )
    report.exponents = fitted_exponents(report)
    logger.info(
        "oscillation_report_assembled",
        order=k,
        map=T.describe(),
        radii=len(rows),
        counting_radii=len(radii),
    )
    return report


# Cumulative columns, fitted through their increments.
CUMULATIVE_COLUMNS = ("rhs_N_sum", "rhs_cross_sum")


def fitted_exponents(report: OscillationReport) -> dict[str, float | None]:
    """Growth exponents of report columns and of n, N for every counted function.

    Fits use radii with ``1 - r`` in ``[0.01, 0.1]``; columns with fewer than
    five usable samples map to None. Cumulative quantities (the ``I_j``, the
    ``N`` integrals and ``N`` itself) are fitted through their increments so
    that bounded offsets do not bias the exponent. Zero counts ``n``, the ratio
    and the pointwise ``cor_*`` columns use the log-log slope.

    ``rhs`` is the exponent of ``rhs_N_sum + rhs_cross_sum``; the log-squared
    term grows slower than any power and contributes 0.
    """
    radii = [row.r for row in report.rows]
    out: dict[str, float | None] = {}
    for name in report.columns()[2:]:
        cumulative = name.startswith("I_") or name in CUMULATIVE_COLUMNS
        out[name] = windowed_exponent(radii, report.column(name), increments=cumulative)
    out["lhs"] = windowed_exponent(radii, [row.lhs for row in report.rows], increments=True)
    sums = [row.rhs_N_sum + row.rhs_cross_sum for row in report.rows]
    out["rhs"] = windowed_exponent(radii, sums, increments=True)
    for name, cf in report.counting.items():
        out[f"n[{name}]"] = windowed_exponent(cf.radii, [float(n) for n in cf.counts])
        out[f"N[{name}]"] = windowed_exponent(cf.radii, cf.integrated, increments=True)
    return out


def exponent_summary(report: OscillationReport) -> dict[str, Any]:
    """LHS and RHS exponents and whether LHS stays within 0.1 of RHS."""
    lhs = report.exponents.get("lhs")
    rhs = report.exponents.get("rhs")
    ordered = None if lhs is None or rhs is None else lhs <= rhs + 0.1
    return {"lhs": lhs, "rhs": rhs, "ordered": ordered}
