from dataclasses import dataclass
from typing import List, Sequence

from vehicle import Actuation, VehicleParams, VehicleState, clamp_actuation


@dataclass(frozen=True)
class SpeedSegment:
    duration: int  # ns
    target_speed: float  # m/s
    steer: float = 0.0  # rad

    def __post_init__(self):
        if self.duration <= 0:
            raise ValueError(f"segment duration must be positive, got {self.duration}ns")
        if self.target_speed < 0:
            raise ValueError(f"target speed must be >= 0, got {self.target_speed}")


class LeaderDriver:
    """Piecewise-constant speed profile tracked with a proportional speed loop."""

    def __init__(self, profile: Sequence[SpeedSegment], speed_gain: float, params: VehicleParams):
        if not profile:
            raise ValueError("leader profile needs at least one segment")
        if speed_gain <= 0:
            raise ValueError(f"speed_gain must be positive, got {speed_gain}")
        self.profile: List[SpeedSegment] = list(profile)
        self.speed_gain = speed_gain
        self.params = params
        ends = []
        t = 0
        for seg in self.profile:
            t += seg.duration
            ends.append(t)
        self._ends = ends

    def segment_at(self, now: int) -> SpeedSegment:
        # segments are half-open [start, end); the last one holds forever
        for seg, end in zip(self.profile, self._ends):
            if now < end:
                return seg
        return self.profile[-1]

    def actuation(self, state: VehicleState, now: int) -> Actuation:
        seg = self.segment_at(now)
        accel = self.speed_gain * (seg.target_speed - state.speed)
        return clamp_actuation(Actuation(accel=accel, steer=seg.steer), self.params)
