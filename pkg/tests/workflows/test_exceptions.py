"""Tests for workflow exceptions."""

import pytest

from ldeconf.workflows.exceptions import (
    WorkflowError,
    WorkflowStepError,
    WorkflowValidationError,
)

pytestmark = pytest.mark.unit


class TestWorkflowError:
    """Tests for WorkflowError base exception."""

    def test_init_with_message_only(self):
        """Details default to an empty dict."""
        error = WorkflowError("Preset failed")

        assert error.message == "Preset failed"
        assert error.details == {}
        assert str(error) == "Preset failed"

    def test_str_with_details(self):
        """Details follow the message."""
        error = WorkflowError("Preset failed", details={"preset": "petal51"})

        assert str(error) == "Preset failed (details: {'preset': 'petal51'})"


class TestWorkflowStepError:
    """Tests for WorkflowStepError."""

    def test_init_minimal(self):
        """Step and attempt are optional."""
        error = WorkflowStepError("Step failed")

        assert error.step_name is None
        assert error.attempt is None
        assert str(error) == "Step failed"

    def test_str_with_step_info(self):
        """Parts are joined with pipes."""
        error = WorkflowStepError(
            "Step failed",
            step_name="theorem2_report",
            attempt=1,
            details={"error_type": "ZeroCountingError"},
        )

        assert str(error) == (
            "Step failed | step='theorem2_report' | attempt=1"
            " | details={'error_type': 'ZeroCountingError'}"
        )

    def test_inheritance(self):
        """Step errors are workflow errors."""
        assert isinstance(WorkflowStepError("x"), WorkflowError)


class TestWorkflowValidationError:
    """Tests for WorkflowValidationError."""

    def test_errors_listed(self):
        """Validation errors appear in the message."""
        error = WorkflowValidationError("Invalid preset parameters", ["rmax: too large"])

        assert error.validation_errors == ["rmax: too large"]
        assert str(error) == "Invalid preset parameters | errors=[rmax: too large]"

    def test_without_errors(self):
        """The error list defaults to empty."""
        error = WorkflowValidationError("Unknown preset: x")

        assert error.validation_errors == []
        assert str(error) == "Unknown preset: x"
