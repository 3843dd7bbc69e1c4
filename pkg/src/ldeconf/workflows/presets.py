"""Named experiment presets

各プリセットは数値実験を1つ実行し、CSV/JSON の成果物を書き出します。

Presets:
    - petal51: 右半平面の閉形式族をケーリー変換で円板に写した振動レポート
    - expsum52: 指数和の解基底をセクター写像で押し出した振動レポートと方向集合
    - schwarz2: k=2 の変換がシュワルツ微分による簡約と一致することの確認
    - kim-roundtrip: 解基底から係数を復元する往復テスト
"""

from __future__ import annotations

import cmath
import math
from pathlib import Path
from typing import Any

import numpy as np
from pydantic import BaseModel, Field, ValidationError

from ldeconf.conformal.domains import ComplexPlane, HalfPlane
from ldeconf.conformal.maps import (
    ConformalMapBase,
    HorodiscMap,
    MobiusMap,
    SectorMap,
    StolzPetalMap,
    StripMap,
    schwarzian,
)
from ldeconf.lde.equation import LinearODE
from ldeconf.lde.examples import (
    Example51DiscSolution,
    example51_coefficient,
    exponential_basis,
    lattice_zeros_example51,
    ode_from_roots,
)
from ldeconf.lde.serializers import PolynomialCoefficient
from ldeconf.lde.solver import taylor_solve_basis
from ldeconf.lde.transform import schwarzian_reduction, transform_ode
from ldeconf.lde.wronskian import kim_recover
from ldeconf.oscillation.directions import exp_sum_directions
from ldeconf.oscillation.report import (
    OscillationReport,
    RadialGrid,
    exponent_summary,
    theorem2_report,
)
from ldeconf.utils.config_loader import AppConfig
from ldeconf.utils.file_manager import FileManager
from ldeconf.workflows.base import ExperimentWorkflow
from ldeconf.workflows.exceptions import WorkflowValidationError

# Half-plane onto the disc: T(z) = (1 + z) / (1 - z).
CAYLEY = MobiusMap(a=1.0, b=1.0, c=-1.0, d=1.0)

DEFAULT_EXPSUM_ROOTS: tuple[complex, ...] = (2.0, -1.0 + 0.3j, -1.0 - 0.3j)


class PresetParams(BaseModel):
    """プリセット共通パラメータ"""

    alpha: float = Field(default=1.5, gt=0.0, lt=2.0, description="Family / sector exponent")
    rmax: float = Field(default=0.99, gt=0.5, lt=1.0, description="Largest report radius")
    points: int = Field(default=16, ge=2, le=200, description="Report radii")
    seed: int = Field(default=0, ge=0, description="Random seed")


def _grid(params: PresetParams, config: AppConfig) -> RadialGrid:
    return RadialGrid.geometric(0.5, params.rmax, params.points, config.report.shrink_b)


class Petal51Workflow(ExperimentWorkflow):
    """右半平面の閉形式族を円板上で解析するプリセット"""

    name = "petal51"

    def execute(self, **params: Any) -> list[Path]:
        p = validate_params(params)
        if p.alpha <= 1.0:
            raise WorkflowValidationError(
                "petal51 needs alpha > 1", validation_errors=[f"alpha={p.alpha}"]
            )
        domain = HalfPlane()
        ode = LinearODE(2, (example51_coefficient(p.alpha, domain=domain),), domain)
        base = [Example51DiscSolution(p.alpha, weights) for weights in ((1.0, 0.0), (0.0, 1.0))]
        grid = _grid(p, self.config)
        report: OscillationReport = self._run_step(
            "theorem2_report", theorem2_report, base, CAYLEY, ode, grid, self.config, pushed=True
        )
        zeros_csv = self._run_step("lattice_check", lattice_check_csv, report, p.alpha)
        summary = {
            "preset": self.name,
            "params": p.model_dump(),
            "exponents": exponent_summary(report),
        }
        return [
            self._save_text(report.to_csv(), f"{self.name}.csv"),
            self._save_text(report.to_json(), f"{self.name}.json"),
            self._save_text(zeros_csv, f"{self.name}_zeros.csv"),
            self._save_json(summary, f"{self.name}_summary.json"),
        ]


def lattice_check_csv(report: OscillationReport, alpha: float) -> str:
    """Counted zeros of ``g_1 + g_2`` next to the closed-form enumeration."""
    cf = report.counting["g_1+g_2"]
    lines = ["r,counted,lattice"]
    for r, n in zip(cf.radii, cf.counts, strict=True):
        lines.append(f"{r:.17g},{n},{len(lattice_zeros_example51(alpha, r))}")
    return "\n".join(lines) + "\n"


class ExpSum52Workflow(ExperimentWorkflow):
    """指数和の解基底をセクター写像で押し出すプリセット"""

    name = "expsum52"

    def execute(self, **params: Any) -> list[Path]:
        roots = [complex(z) for z in params.pop("roots", DEFAULT_EXPSUM_ROOTS)]
        p = validate_params(params)
        T = SectorMap(alpha=p.alpha)
        ode = self._run_step("ode_from_roots", ode_from_roots, roots)
        base = self._run_step("exponential_basis", exponential_basis, ode)
        grid = _grid(p, self.config)
        report: OscillationReport = self._run_step(
            "theorem2_report", theorem2_report, base, T, ode, grid, self.config
        )
        directions = self._run_step("directions", exp_sum_directions, roots)
        summary = {
            "preset": self.name,
            "params": p.model_dump(),
            "roots": roots,
            "directions": directions,
            "exponents": exponent_summary(report),
        }
        return [
            self._save_text(report.to_csv(), f"{self.name}.csv"),
            self._save_text(report.to_json(), f"{self.name}.json"),
            self._save_json(summary, f"{self.name}_summary.json"),
        ]


def schwarz2_maps(alpha: float) -> list[ConformalMapBase]:
    return [
        MobiusMap(a=1.0, b=0.3, c=0.2, d=1.0),
        SectorMap(alpha=alpha),
        StripMap(alpha=1.0),
        StolzPetalMap(alpha=0.5),
        HorodiscMap(zeta=0.5),
    ]


def schwarz2_rows(alpha: float) -> list[dict[str, Any]]:
    """General order-2 transform against ``(a o T) T'^2 + S_T / 2`` per map kind."""
    domain = ComplexPlane()
    a = PolynomialCoefficient(coeffs=[1.0, 0.5, 0.25]).build(domain)
    ode = LinearODE(2, (a,), domain)
    points = [s * cmath.exp(1j * t) for t in np.linspace(0.0, 6.0, 6) for s in (0.2, 0.8)]
    rows = []
    for T in schwarz2_maps(alpha):
        general = transform_ode(ode, T).coeffs[0]
        reduced = schwarzian_reduction(a, T)
        diff = max(
            abs(general.value(z) - reduced.value(z)) / max(abs(reduced.value(z)), 1e-300)
            for z in points
        )
        largest = max(abs(schwarzian(T, z)) for z in points)
        rows.append({"map": T.describe(), "max_rel_diff": diff, "max_abs_schwarzian": largest})
    return rows


class Schwarz2Workflow(ExperimentWorkflow):
    """k=2 の変換公式とシュワルツ微分による簡約の比較"""

    name = "schwarz2"

    def execute(self, **params: Any) -> list[Path]:
        p = validate_params(params)
        rows = self._run_step("compare", schwarz2_rows, p.alpha)
        lines = ["map,max_rel_diff,max_abs_schwarzian"]
        for row in rows:
            lines.append(
                f"\"{row['map']}\",{row['max_rel_diff']:.17g},{row['max_abs_schwarzian']:.17g}"
            )
        return [
            self._save_text("\n".join(lines) + "\n", f"{self.name}.csv"),
            self._save_json({"preset": self.name, "rows": rows}, f"{self.name}.json"),
        ]


def random_polynomial_ode(k: int, rng: np.random.Generator) -> LinearODE:
    """Order-k ODE with quadratic polynomial coefficients of modulus below one."""
    domain = ComplexPlane()
    coeffs = []
    for _ in range(k - 1):
        values = rng.uniform(-0.5, 0.5, 3) + 1j * rng.uniform(-0.5, 0.5, 3)
        coeffs.append(PolynomialCoefficient(coeffs=list(values)).build(domain))
    return LinearODE(k, tuple(coeffs), domain)


def kim_roundtrip_rows(
    config: AppConfig, seed: int = 0, orders: tuple[int, ...] = (2, 3, 4), count: int = 20
) -> list[dict[str, Any]]:
    """Relative error of recovered coefficients at random points of ``|z| <= 0.5``."""
    rng = np.random.default_rng(seed)
    rows = []
    for k in orders:
        ode = random_polynomial_ode(k, rng)
        basis = taylor_solve_basis(ode, 0.0, np.eye(k) + 1.0, config=config.solver)
        radii = rng.uniform(0.1, 0.5, count)
        angles = rng.uniform(0.0, 2 * math.pi, count)
        for r, t in zip(radii, angles, strict=True):
            z = complex(r * math.cos(t), r * math.sin(t))
            expected = ode.coefficient_values(z)
            recovered = np.array(kim_recover(basis, z))
            scale = max(float(np.max(np.abs(expected))), 1e-300)
            rows.append(
                {
                    "k": k,
                    "z": z,
                    "max_rel_err": float(np.max(np.abs(recovered - expected))) / scale,
                }
            )
    return rows


class KimRoundtripWorkflow(ExperimentWorkflow):
    """解基底からの係数復元の往復テスト"""

    name = "kim-roundtrip"

    def execute(self, **params: Any) -> list[Path]:
        p = validate_params(params)
        rows = self._run_step("roundtrip", kim_roundtrip_rows, self.config, p.seed)
        lines = ["k,z_re,z_im,max_rel_err"]
        for row in rows:
            z = row["z"]
            lines.append(f"{row['k']},{z.real:.17g},{z.imag:.17g},{row['max_rel_err']:.17g}")
        worst = max(row["max_rel_err"] for row in rows)
        return [
            self._save_text("\n".join(lines) + "\n", "kim_roundtrip.csv"),
            self._save_json(
                {"preset": self.name, "seed": p.seed, "max_rel_err": worst}, "kim_roundtrip.json"
            ),
        ]


PRESETS: dict[str, type[ExperimentWorkflow]] = {
    "petal51": Petal51Workflow,
    "expsum52": ExpSum52Workflow,
    "schwarz2": Schwarz2Workflow,
    "kim-roundtrip": KimRoundtripWorkflow,
}


def validate_params(params: dict[str, Any]) -> PresetParams:
    """Validate preset parameters, dropping unset ones.

    Raises:
        WorkflowValidationError: A parameter is out of range
    """
    try:
        return PresetParams.model_validate({k: v for k, v in params.items() if v is not None})
    except ValidationError as e:
        errors = [f"{'.'.join(map(str, err['loc']))}: {err['msg']}" for err in e.errors()]
        raise WorkflowValidationError("Invalid preset parameters", errors) from e


def run_preset(
    name: str, config: AppConfig, output_dir: str | Path, **params: Any
) -> list[Path]:
    """Run a named preset and return the written artifact paths.

    Raises:
        WorkflowValidationError: Unknown preset or invalid parameters
        WorkflowStepError: A numerical step failed
    """
    if name not in PRESETS:
        raise WorkflowValidationError(
            f"Unknown preset: {name}", validation_errors=[f"choose from {sorted(PRESETS)}"]
        )
    manager = FileManager(output_dir, overwrite=config.output.overwrite)
    workflow = PRESETS[name](config, manager)
    return workflow.execute(**params)
