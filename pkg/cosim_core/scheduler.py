"""
Event-driven half of the co-simulation.

Events are kept in a binary heap keyed by (fire_at, seq); seq comes from a
per-scheduler counter so equal timestamps run in insertion order.
"""

import heapq
import logging
from dataclasses import dataclass
from typing import Any, Callable, List, Optional, Tuple

logger = logging.getLogger(__name__)


class SyncViolation(RuntimeError):
    """Raised when the clock-barrier protocol is broken."""


@dataclass(frozen=True)
class Event:
    fire_at: int
    seq: int
    target: str
    payload: Any = None

    def sort_key(self) -> Tuple[int, int]:
        return (self.fire_at, self.seq)


class EventScheduler:
    """
    Priority-queue scheduler with integer-nanosecond time.

    dispatch is called once per executed event, in (fire_at, seq) order.
    """

    def __init__(self, dispatch: Callable[[Event], None], record_trace: bool = False):
        self._dispatch = dispatch
        self._queue: List[Tuple[int, int, Event]] = []
        self._now = 0
        self._next_seq = 0
        self.executed = 0
        self.trace: Optional[List[Tuple[int, int, str]]] = [] if record_trace else None

    def now(self) -> int:
        return self._now

    def pending(self) -> int:
        return len(self._queue)

    def next_fire_at(self) -> Optional[int]:
        return self._queue[0][0] if self._queue else None

    def schedule(self, fire_at: int, target: str, payload: Any = None) -> Event:
        if fire_at < self._now:
            raise SyncViolation(
                f"cannot schedule event in the past: fire_at={fire_at}ns < now={self._now}ns"
            )
        event = Event(fire_at=fire_at, seq=self._next_seq, target=target, payload=payload)
        self._next_seq += 1
        heapq.heappush(self._queue, (fire_at, event.seq, event))
        return event

    def run_until(self, t: int) -> int:
        """Execute every queued event with fire_at <= t, then set now to t."""
        if t < self._now:
            raise SyncViolation(f"run_until({t}ns) is behind now={self._now}ns")
        count = 0
        while self._queue and self._queue[0][0] <= t:
            fire_at, _, event = heapq.heappop(self._queue)
            self._now = fire_at
            if self.trace is not None:
                self.trace.append((event.fire_at, event.seq, event.target))
            self._dispatch(event)
            count += 1
        self._now = t
        self.executed += count
        return count
