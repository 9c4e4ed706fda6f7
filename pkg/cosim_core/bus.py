"""Simple synchronous topic bus standing in for ROS transport."""

import logging
from collections import defaultdict
from dataclasses import dataclass
from typing import Any, Callable, Dict, List

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BusMessage:
    topic: str
    payload: Any
    publish_time: int


Handler = Callable[[BusMessage], None]


class Subscription:
    def __init__(self, bus: "MessageBus", topic: str, handler: Handler):
        self.bus = bus
        self.topic = topic
        self.handler = handler
        self.active = True

    def cancel(self) -> None:
        if self.active:
            self.active = False
            self.bus._remove(self)


class MessageBus:
    """
    Message broker with no retention: a subscriber only sees messages published
    after it subscribed. Handlers run synchronously, in subscription order.
    """

    def __init__(self, clock: Callable[[], int]):
        self._clock = clock
        self._subs: Dict[str, List[Subscription]] = defaultdict(list)
        self.published = 0

    def subscribe(self, topic: str, handler: Handler) -> Subscription:
        _check_topic(topic)
        sub = Subscription(self, topic, handler)
        self._subs[topic].append(sub)
        logger.debug("subscribed %r to %s", handler, topic)
        return sub

    def publish(self, topic: str, payload: Any) -> None:
        _check_topic(topic)
        self.published += 1
        msg = BusMessage(topic=topic, payload=payload, publish_time=self._clock())
        # copy so handlers may cancel or subscribe while we iterate
        for sub in list(self._subs.get(topic, ())):
            if sub.active:
                sub.handler(msg)

    def subscriber_count(self, topic: str) -> int:
        return len(self._subs.get(topic, ()))

    def _remove(self, sub: Subscription) -> None:
        subs = self._subs.get(sub.topic)
        if subs and sub in subs:
            subs.remove(sub)


def _check_topic(topic: str) -> None:
    if not topic:
        raise ValueError("topic name must be non-empty")
