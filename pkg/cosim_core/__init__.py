# cosim_core package - hybrid event-driven / time-driven simulation kernel
from .simtime import NANOS_PER_SECOND, hz_to_period, nanos_to_seconds, seconds_to_nanos
from .scheduler import Event, EventScheduler
from .bus import BusMessage, MessageBus, Subscription
from .kernel import CLOCK_TOPIC, CoSimKernel, SyncViolation

__all__ = [
    "NANOS_PER_SECOND",
    "hz_to_period",
    "nanos_to_seconds",
    "seconds_to_nanos",
    "Event",
    "EventScheduler",
    "BusMessage",
    "MessageBus",
    "Subscription",
    "CLOCK_TOPIC",
    "CoSimKernel",
    "SyncViolation",
]
