"""
Run tracing for scenario runs and sweeps.

Spans are always timed locally and summarised at INFO by finish_trace. When
LANGFUSE_PUBLIC_KEY and LANGFUSE_SECRET_KEY are set (LANGFUSE_HOST optional),
every trace and span is mirrored to Langfuse too. Nothing here feeds back into
simulation state, so traced and untraced runs produce the same outputs.
"""

import itertools
import logging
import os
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Any, Dict, Iterator, List, Optional

logger = logging.getLogger(__name__)

# Global Langfuse client, None when tracing stays local
lf = None
_initialized = False

_trace_ids = itertools.count(1)


def _initialize_langfuse() -> None:
    global lf, _initialized

    if _initialized:
        return
    _initialized = True

    try:
        from langfuse import Langfuse

        public_key = os.getenv("LANGFUSE_PUBLIC_KEY")
        secret_key = os.getenv("LANGFUSE_SECRET_KEY")
        host = os.getenv("LANGFUSE_HOST", "https://cloud.langfuse.com")

        if public_key and secret_key:
            lf = Langfuse(public_key=public_key, secret_key=secret_key, host=host)
            logger.info("Langfuse initialized with host: %s", host)
        else:
            logger.debug("Langfuse credentials not found, spans stay local")
            lf = None
    except ImportError:
        logger.debug("langfuse not installed, spans stay local")
        lf = None
    except Exception as e:
        logger.warning("Failed to initialize Langfuse: %s", e)
        lf = None


@dataclass
class SpanRecord:
    name: str
    input: Any = None
    output: Any = None
    metadata: Dict[str, Any] = field(default_factory=dict)
    duration_s: float = 0.0
    error: Optional[str] = None


@dataclass
class RunTrace:
    operation: str
    id: str
    metadata: Dict[str, Any] = field(default_factory=dict)
    spans: List[SpanRecord] = field(default_factory=list)
    started: float = field(default_factory=time.perf_counter)
    finished: Optional[float] = None
    remote: Any = None  # Langfuse trace client

    @property
    def elapsed_s(self) -> float:
        end = self.finished if self.finished is not None else time.perf_counter()
        return end - self.started


def start_trace(operation: str, metadata: Optional[Dict[str, Any]] = None) -> RunTrace:
    _initialize_langfuse()
    metadata = dict(metadata or {})

    remote = None
    if lf is not None:
        try:
            remote = lf.trace(name=operation, metadata=metadata)
        except Exception as e:
            logger.warning("Failed to start Langfuse trace: %s", e)

    trace_id = getattr(remote, "id", None) or f"{operation}-{next(_trace_ids)}"
    trace = RunTrace(operation=operation, id=trace_id, metadata=metadata, remote=remote)
    logger.debug("trace %s started %s", trace.id, trace.metadata)
    return trace


def _open_span(trace: RunTrace, name: str, input_data: Any, metadata: Dict[str, Any]) -> Any:
    if trace.remote is None:
        return None
    try:
        return trace.remote.span(name=name, input=input_data, metadata=metadata)
    except Exception as e:
        logger.warning("Span creation failed: %s", e)
        return None


def _close_span(span: Any, **update: Any) -> None:
    if span is None:
        return
    try:
        span.update(**update)
        span.end()
    except Exception as e:
        logger.warning("Failed to close Langfuse span: %s", e)


@contextmanager
def with_span(
    trace: Optional[RunTrace],
    name: str,
    input_data: Optional[Any] = None,
    metadata: Optional[Dict[str, Any]] = None,
) -> Iterator[Dict[str, Any]]:
    """Time a block. The yielded dict's 'output' entry is stored on the span."""
    span_result: Dict[str, Any] = {"output": None, "metadata": dict(metadata or {})}
    if trace is None:
        yield span_result
        return

    record = SpanRecord(name=name, input=input_data, metadata=span_result["metadata"])
    span = _open_span(trace, name, input_data, record.metadata)
    t0 = time.perf_counter()
    try:
        yield span_result
    except Exception as e:
        record.error = f"{type(e).__name__}: {e}"
        _close_span(span, output={"error": str(e), "error_type": type(e).__name__}, level="ERROR")
        raise
    else:
        _close_span(span, output=span_result["output"])
    finally:
        record.duration_s = time.perf_counter() - t0
        record.output = span_result["output"]
        trace.spans.append(record)


def finish_trace(trace: Optional[RunTrace]) -> Optional[Dict[str, Any]]:
    if trace is None:
        return None
    trace.finished = time.perf_counter()
    for span in trace.spans:
        if span.error:
            logger.warning("[%s] %s failed after %.3fs: %s", trace.id, span.name, span.duration_s, span.error)
        else:
            logger.info("[%s] %s %.3fs", trace.id, span.name, span.duration_s)
    logger.info("[%s] %s done in %.3fs (%d spans)", trace.id, trace.operation, trace.elapsed_s, len(trace.spans))
    result = {
        "id": trace.id,
        "operation": trace.operation,
        "elapsed_s": trace.elapsed_s,
        "exported": trace.remote is not None,
        "spans": [{"name": s.name, "duration_s": s.duration_s, "error": s.error} for s in trace.spans],
    }

    if trace.remote is not None:
        try:
            trace.remote.update(output={"elapsed_s": result["elapsed_s"], "spans": len(trace.spans)})
            lf.flush()
        except Exception as e:
            logger.warning("Failed to flush traces: %s", e)
    return result


def get_trace_id(trace: Optional[RunTrace]) -> Optional[str]:
    return trace.id if trace is not None else None
