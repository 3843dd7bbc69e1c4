"""ldeconf Workflows

名前付き数値実験プリセットとその実行基盤を提供します。

Main Components:
    - ExperimentWorkflow: 実験ワークフロー実行の基底クラス
    - PRESETS: プリセット名からワークフロークラスへの対応表
    - run_preset: プリセットを実行して成果物のパスを返す

Example:
    >>> from ldeconf.utils.config_loader import AppConfig
    >>> paths = run_preset("schwarz2", AppConfig(), "out/")
"""

from ldeconf.workflows.base import ExperimentWorkflow
from ldeconf.workflows.exceptions import (
    WorkflowError,
    WorkflowStepError,
    WorkflowValidationError,
)
from ldeconf.workflows.presets import PRESETS, PresetParams, run_preset

__all__ = [
    "PRESETS",
    "ExperimentWorkflow",
    "PresetParams",
    "WorkflowError",
    "WorkflowStepError",
    "WorkflowValidationError",
    "run_preset",
]
