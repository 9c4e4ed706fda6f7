import logging
import os
from unittest.mock import MagicMock, patch

import pytest

import obs.run_trace
from obs.run_trace import finish_trace, get_trace_id, start_trace, with_span


def _reset_client(client=None):
    obs.run_trace._initialized = client is not None
    obs.run_trace.lf = client


class TestRunTrace:
    """Span bookkeeping for runs and sweeps"""

    def setup_method(self):
        _reset_client()

    def test_start_trace_has_id(self):
        with patch.dict(os.environ, {}, clear=True):
            trace = start_trace("run", metadata={"seed": 1})

        assert get_trace_id(trace).startswith("run-")
        assert trace.metadata == {"seed": 1}
        assert trace.remote is None

    def test_ids_are_unique(self):
        with patch.dict(os.environ, {}, clear=True):
            assert get_trace_id(start_trace("run")) != get_trace_id(start_trace("run"))

    def test_span_records_output(self):
        with patch.dict(os.environ, {}, clear=True):
            trace = start_trace("run")
        with with_span(trace, "step", input_data={"ticks": 5}) as span:
            span["output"] = {"ok": True}

        assert len(trace.spans) == 1
        assert trace.spans[0].name == "step"
        assert trace.spans[0].input == {"ticks": 5}
        assert trace.spans[0].output == {"ok": True}
        assert trace.spans[0].duration_s >= 0.0

    def test_span_without_trace_is_noop(self):
        with with_span(None, "step") as span:
            span["output"] = 1

        assert span["output"] == 1
        assert get_trace_id(None) is None
        assert finish_trace(None) is None

    def test_span_error_recorded_and_reraised(self):
        with patch.dict(os.environ, {}, clear=True):
            trace = start_trace("run")
        with pytest.raises(RuntimeError):
            with with_span(trace, "boom"):
                raise RuntimeError("bad tick")

        assert trace.spans[0].error == "RuntimeError: bad tick"

    def test_finish_logs_spans(self, caplog):
        with patch.dict(os.environ, {}, clear=True):
            trace = start_trace("sweep")
        with with_span(trace, "run_scenario"):
            pass

        with caplog.at_level(logging.INFO, logger="obs.run_trace"):
            result = finish_trace(trace)

        assert result["operation"] == "sweep"
        assert result["exported"] is False
        assert [s["name"] for s in result["spans"]] == ["run_scenario"]
        assert "run_scenario" in caplog.text


class TestLangfuseExport:
    """Spans mirrored to a Langfuse client"""

    def setup_method(self):
        self.client = MagicMock()
        self.remote = self.client.trace.return_value
        self.remote.id = "lf-trace-1"
        self.span = self.remote.span.return_value
        _reset_client(self.client)

    def teardown_method(self):
        _reset_client()

    def test_trace_uses_remote_id(self):
        trace = start_trace("run", metadata={"seed": 4})

        self.client.trace.assert_called_once_with(name="run", metadata={"seed": 4})
        assert get_trace_id(trace) == "lf-trace-1"

    def test_span_output_sent_and_closed(self):
        trace = start_trace("run")
        with with_span(trace, "run_scenario", input_data={"cam_hz": 10.0}) as span:
            span["output"] = {"ticks": 50}

        self.remote.span.assert_called_once_with(name="run_scenario", input={"cam_hz": 10.0}, metadata={})
        self.span.update.assert_called_once_with(output={"ticks": 50})
        self.span.end.assert_called_once()

    def test_failed_span_marked_error(self):
        trace = start_trace("run")
        with pytest.raises(ValueError):
            with with_span(trace, "run_scenario"):
                raise ValueError("bad config")

        self.span.update.assert_called_once_with(
            output={"error": "bad config", "error_type": "ValueError"}, level="ERROR"
        )
        self.span.end.assert_called_once()

    def test_finish_flushes(self):
        trace = start_trace("sweep")
        with with_span(trace, "run_sweep"):
            pass
        result = finish_trace(trace)

        assert result["exported"] is True
        self.client.flush.assert_called_once()

    def test_client_errors_keep_local_spans(self):
        self.remote.span.side_effect = RuntimeError("network down")
        trace = start_trace("run")
        with with_span(trace, "run_scenario") as span:
            span["output"] = 1

        assert trace.spans[0].output == 1
        assert trace.spans[0].error is None

    def test_trace_start_failure_falls_back_to_local_id(self):
        self.client.trace.side_effect = RuntimeError("auth")
        trace = start_trace("run")

        assert trace.remote is None
        assert get_trace_id(trace).startswith("run-")


class TestLangfuseInit:
    def setup_method(self):
        _reset_client()

    def teardown_method(self):
        _reset_client()

    def test_no_credentials_stays_local(self):
        with patch.dict(os.environ, {}, clear=True):
            trace = start_trace("run")

        assert obs.run_trace.lf is None
        assert trace.remote is None
