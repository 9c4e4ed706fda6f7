from dataclasses import dataclass
from typing import Optional

from cosim_core.simtime import hz_to_period
from vehicle import OdometrySample

from .cam import EncodedFrame, cam_encode
from .vdp import vdp_sample


@dataclass(frozen=True)
class CaServiceConfig:
    generation_hz: float = 10.0

    @property
    def period(self) -> int:
        return hz_to_period(self.generation_hz)

    def check_tick(self, tick_period: int) -> None:
        if self.period % tick_period != 0:
            raise ValueError(
                f"CAM period {self.period}ns ({self.generation_hz} Hz) is not a multiple "
                f"of the tick period {tick_period}ns"
            )


def ca_service_step(
    now: int, cfg: CaServiceConfig, odom: OdometrySample, station_id: int
) -> Optional[EncodedFrame]:
    """Fixed-rate generation: a frame exactly when now is a multiple of the period."""
    if now % cfg.period != 0:
        return None
    return cam_encode(vdp_sample(odom, station_id, now))


class CaService:
    """Per-node CA basic service; counts what it generated."""

    def __init__(self, station_id: int, cfg: CaServiceConfig):
        self.station_id = station_id
        self.cfg = cfg
        self.generated = 0

    def step(self, now: int, odom: OdometrySample) -> Optional[EncodedFrame]:
        frame = ca_service_step(now, self.cfg, odom, self.station_id)
        if frame is not None:
            self.generated += 1
        return frame
