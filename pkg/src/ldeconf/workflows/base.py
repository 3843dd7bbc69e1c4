"""Experiment Workflow Base Class

すべての実験ワークフローの基底クラスを定義します。

Main Components:
    - ExperimentWorkflow: 実験ワークフロー実行の抽象基底クラス
"""

from abc import ABC, abstractmethod
from collections.abc import Callable
from pathlib import Path
from typing import Any, TypeVar

import structlog

from ldeconf.utils.config_loader import AppConfig
from ldeconf.utils.file_manager import FileManager
from ldeconf.workflows.exceptions import WorkflowStepError

T = TypeVar("T")


class ExperimentWorkflow(ABC):
    """実験ワークフローの基底クラス

    ステップ管理、エラーハンドリング、成果物の書き出しを統一的に扱います。
    数値計算は決定的なので、失敗したステップは既定ではリトライしません。

    Attributes:
        name: プリセット名（成果物ファイル名の接頭辞）
        config: 数値設定
        file_manager: 出力ファイルマネージャー
        logger: 構造化ロガー

    Example:
        >>> class MyWorkflow(ExperimentWorkflow):
        ...     name = "mine"
        ...     def execute(self, **params):
        ...         report = self._run_step("report", build_report, params)
        ...         return [self._save_text(report.to_csv(), "mine.csv")]
    """

    name: str = "experiment"

    def __init__(self, config: AppConfig, file_manager: FileManager) -> None:
        self.config = config
        self.file_manager = file_manager
        self.logger = structlog.get_logger(self.__class__.__name__)

    @abstractmethod
    def execute(self, **params: Any) -> list[Path]:
        """ワークフローの実行

        Returns:
            list[Path]: 書き出した成果物のパス

        Raises:
            WorkflowError: ワークフロー実行エラー
        """
        raise NotImplementedError

    def _run_step(
        self,
        step_name: str,
        step_func: Callable[..., T],
        *args: Any,
        max_retries: int = 1,
        **kwargs: Any,
    ) -> T:
        """ステップの実行とエラーハンドリング

        Args:
            step_name: ステップ名（ログ用）
            step_func: 実行する関数
            *args: 関数の位置引数
            max_retries: 最大試行回数（デフォルト: 1）
            **kwargs: 関数のキーワード引数

        Returns:
            T: ステップの実行結果

        Raises:
            WorkflowStepError: ステップが最大試行回数まで失敗した場合
        """
        self.logger.info("workflow_step_start", workflow=self.name, step=step_name)

        for attempt in range(max_retries):
            try:
                result = step_func(*args, **kwargs)
                self.logger.info("workflow_step_success", workflow=self.name, step=step_name)
                return result
            except Exception as e:
                self.logger.warning(
                    "workflow_step_failed",
                    workflow=self.name,
                    step=step_name,
                    attempt=attempt + 1,
                    max_retries=max_retries,
                    error=str(e),
                    error_type=type(e).__name__,
                )
                if attempt < max_retries - 1:
                    continue
                raise WorkflowStepError(
                    f"Step '{step_name}' failed: {e}",
                    step_name=step_name,
                    attempt=attempt + 1,
                    details={"original_error": str(e), "error_type": type(e).__name__},
                ) from e

        raise AssertionError("Should never reach here")  # pragma: no cover

    def _save_text(self, content: str, filename: str) -> Path:
        return self.file_manager.save_text(content, filename)

    def _save_json(self, data: Any, filename: str) -> Path:
        return self.file_manager.save_json(data, filename)
