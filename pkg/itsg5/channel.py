"""
Parametric broadcast channel replacing the ITS-G5 PHY/MAC.

Per receiver (ascending node id, sender excluded):
  out of range (distance > range)   -> no event
  Bernoulli(loss_prob) drop         -> no event
  otherwise deliver at now + delay_fixed + Uniform(0, delay_jitter)

One numpy Generator per channel instance; a loss draw is taken for every
in-range receiver so the stream stays aligned across loss_prob values.
"""

import logging
import math
from dataclasses import dataclass
from typing import Dict, List, Optional

import numpy as np

from cosim_core import CoSimKernel

from .cam import EncodedFrame
from .mobility import Position

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ChannelConfig:
    delay_fixed: int = 1_000_000  # ns
    delay_jitter: int = 0  # ns
    loss_prob: float = 0.0
    range_m: float = 300.0
    rng_seed: int = 0

    def __post_init__(self):
        if not 0.0 <= self.loss_prob <= 1.0:
            raise ValueError(f"loss_prob must be in [0, 1], got {self.loss_prob}")
        if self.range_m <= 0:
            raise ValueError(f"range must be positive, got {self.range_m}")
        if self.delay_fixed < 0 or self.delay_jitter < 0:
            raise ValueError("channel delays must be >= 0")


@dataclass(frozen=True)
class Delivery:
    sender: str
    receiver: str
    deliver_at: int
    frame: EncodedFrame


@dataclass
class ChannelStats:
    sent: int = 0
    delivered: int = 0
    dropped: int = 0
    out_of_range: int = 0


def channel_transmit(
    frame: EncodedFrame,
    sender: str,
    sender_pos: Position,
    all_node_positions: Dict[str, Position],
    cfg: ChannelConfig,
    now: int,
    rng: np.random.Generator,
    stats: Optional[ChannelStats] = None,
) -> List[Delivery]:
    deliveries = []
    sx, sy = sender_pos
    for receiver in sorted(all_node_positions):
        if receiver == sender:
            continue
        rx, ry = all_node_positions[receiver]
        if math.hypot(rx - sx, ry - sy) > cfg.range_m:
            if stats is not None:
                stats.out_of_range += 1
            continue
        if rng.random() < cfg.loss_prob:
            if stats is not None:
                stats.dropped += 1
            continue
        delay = cfg.delay_fixed
        if cfg.delay_jitter > 0:
            delay += int(round(rng.random() * cfg.delay_jitter))
        deliveries.append(Delivery(sender=sender, receiver=receiver, deliver_at=now + delay, frame=frame))
        if stats is not None:
            stats.delivered += 1
    if stats is not None:
        stats.sent += 1
    return deliveries


class BroadcastChannel:
    """Owns the RNG stream and hands surviving frames to the kernel as events."""

    def __init__(self, cfg: ChannelConfig, kernel: CoSimKernel):
        self.cfg = cfg
        self.kernel = kernel
        self.stats = ChannelStats()
        self._rng = np.random.default_rng(cfg.rng_seed)

    def transmit(
        self, frame: EncodedFrame, sender: str, positions: Dict[str, Position], now: int
    ) -> List[Delivery]:
        deliveries = channel_transmit(
            frame, sender, positions[sender], positions, self.cfg, now, self._rng, self.stats
        )
        for d in deliveries:
            self.kernel.schedule(d.deliver_at, d.receiver, d)
        logger.debug("%s sent at %dns: %d deliveries", sender, now, len(deliveries))
        return deliveries

