from collections import deque
from dataclasses import dataclass
from typing import Deque, Optional

from itsg5 import Cam

DEFAULT_TRAIL_CAPACITY = 256


@dataclass(frozen=True)
class Waypoint:
    x: float
    y: float
    time: int  # ns, reception time


class LeaderTrail:
    """Bounded FIFO of predecessor positions decoded from received CAMs."""

    def __init__(self, capacity: int = DEFAULT_TRAIL_CAPACITY):
        if capacity <= 0:
            raise ValueError(f"trail capacity must be positive, got {capacity}")
        self.capacity = capacity
        self.waypoints: Deque[Waypoint] = deque(maxlen=capacity)
        self.last_cam_time: Optional[int] = None
        self.last_speed_value = 0

    def __len__(self) -> int:
        return len(self.waypoints)

    def is_empty(self) -> bool:
        return not self.waypoints

    def newest(self) -> Optional[Waypoint]:
        return self.waypoints[-1] if self.waypoints else None


def on_cam_received(trail: LeaderTrail, cam: Cam, now: int) -> LeaderTrail:
    """Append the CAM position; a CAM not newer than the last waypoint is ignored."""
    newest = trail.newest()
    if newest is not None and now <= newest.time:
        return trail
    trail.waypoints.append(Waypoint(x=cam.x_cm / 100.0, y=cam.y_cm / 100.0, time=now))
    trail.last_cam_time = now
    trail.last_speed_value = cam.speed_value
    return trail
