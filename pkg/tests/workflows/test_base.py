"""Tests for ExperimentWorkflow base class."""

import json
from pathlib import Path
from typing import Any

import pytest

from ldeconf.utils.config_loader import AppConfig
from ldeconf.utils.file_manager import FileManager
from ldeconf.workflows.base import ExperimentWorkflow
from ldeconf.workflows.exceptions import WorkflowStepError

pytestmark = pytest.mark.unit


class EchoWorkflow(ExperimentWorkflow):
    """Writes its parameters to a JSON artifact."""

    name = "echo"

    def execute(self, **params: Any) -> list[Path]:
        value = self._run_step("double", lambda x: 2 * x, params["x"])
        return [self._save_json({"value": value}, "echo.json")]


class TestExperimentWorkflow:
    """Tests for ExperimentWorkflow."""

    @pytest.fixture
    def workflow(self, tmp_path):
        return EchoWorkflow(AppConfig(), FileManager(tmp_path))

    def test_init(self, workflow, tmp_path):
        """Config, file manager and logger are attached."""
        assert workflow.config == AppConfig()
        assert workflow.file_manager.output_base_dir == tmp_path
        assert workflow.logger is not None

    def test_execute_must_be_implemented(self, tmp_path):
        """The base class is abstract."""
        with pytest.raises(TypeError):
            ExperimentWorkflow(AppConfig(), FileManager(tmp_path))  # type: ignore[abstract]

    def test_execute_writes_artifacts(self, workflow):
        """Steps run and artifacts are written."""
        (path,) = workflow.execute(x=21)

        assert json.loads(path.read_text(encoding="utf-8")) == {"value": 42}

    def test_run_step_success(self, workflow, mocker):
        """Keyword arguments are forwarded."""
        step = mocker.MagicMock(return_value="ok")

        assert workflow._run_step("step", step, 1, key="v") == "ok"
        step.assert_called_once_with(1, key="v")

    def test_run_step_wraps_failure(self, workflow, mocker):
        """A failing step becomes WorkflowStepError with the original type."""
        step = mocker.MagicMock(side_effect=ArithmeticError("overflow"))

        with pytest.raises(WorkflowStepError) as exc_info:
            workflow._run_step("integrate", step)

        error = exc_info.value
        assert error.step_name == "integrate"
        assert error.attempt == 1
        assert error.details["error_type"] == "ArithmeticError"
        assert isinstance(error.__cause__, ArithmeticError)
        step.assert_called_once()

    def test_run_step_retries(self, workflow, mocker):
        """Retries are opt-in."""
        step = mocker.MagicMock(side_effect=[RuntimeError("first"), "second"])

        assert workflow._run_step("flaky", step, max_retries=2) == "second"
        assert step.call_count == 2
