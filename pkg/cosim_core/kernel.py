"""
Clock barrier between the event-driven network side and the time-driven
physics side.

Lockstep protocol, per physics step N:
    physics step N runs -> advance_tick() publishes tick N on /clock
    -> network drains with run_until(horizon) before step N+1.

The scheduler never executes an event later than the latest published tick.
"""

import logging
from typing import Any, Callable, Dict

from .bus import MessageBus
from .scheduler import Event, EventScheduler, SyncViolation

logger = logging.getLogger(__name__)

CLOCK_TOPIC = "/clock"

EventHandler = Callable[[Event], None]


class CoSimKernel:
    def __init__(self, period: int, record_trace: bool = False):
        if period <= 0:
            raise ValueError(f"tick period must be positive, got {period}ns")
        self.period = period
        self.horizon = 0
        self.ticks = 0
        self.scheduler = EventScheduler(self._dispatch, record_trace=record_trace)
        self.bus = MessageBus(clock=self.now)
        self._handlers: Dict[str, EventHandler] = {}

    def now(self) -> int:
        return self.scheduler.now()

    def register_node(self, node_id: str, handler: EventHandler) -> None:
        if node_id in self._handlers:
            raise ValueError(f"node {node_id!r} already registered")
        self._handlers[node_id] = handler

    def schedule(self, fire_at: int, target: str, payload: Any = None) -> Event:
        return self.scheduler.schedule(fire_at, target, payload)

    def run_until(self, t: int) -> int:
        if t > self.horizon:
            raise SyncViolation(
                f"network side may not run to {t}ns past the clock horizon {self.horizon}ns"
            )
        return self.scheduler.run_until(t)

    def advance_tick(self) -> int:
        head = self.scheduler.next_fire_at()
        if head is not None and head <= self.horizon:
            raise SyncViolation(
                f"advance_tick with undrained event at {head}ns <= horizon {self.horizon}ns"
            )
        self.horizon += self.period
        self.ticks += 1
        self.bus.publish(CLOCK_TOPIC, self.horizon)
        return self.horizon

    def _dispatch(self, event: Event) -> None:
        now = self.scheduler.now()
        if now > self.horizon:
            raise SyncViolation(f"event executed at {now}ns beyond horizon {self.horizon}ns")
        handler = self._handlers.get(event.target)
        if handler is None:
            raise LookupError(f"no node registered for event target {event.target!r}")
        logger.debug("dispatch seq=%d t=%dns -> %s", event.seq, event.fire_at, event.target)
        handler(event)
