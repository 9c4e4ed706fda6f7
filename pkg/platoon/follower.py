"""
CAM-only follower: PID gap keeping to the predecessor's newest reported
position, PID steering toward its trail, and a lost-track stop maneuver.
"""

import logging
import math
from dataclasses import dataclass
from typing import Optional, Tuple

from cosim_core import BusMessage, MessageBus, nanos_to_seconds
from itsg5 import ReceivedCam, cam_topic
from vehicle import Actuation, VehicleParams, VehicleState, normalize_angle

from .pid import PidGains, PidState, pid_step
from .trail import DEFAULT_TRAIL_CAPACITY, LeaderTrail, Waypoint, on_cam_received

logger = logging.getLogger(__name__)

DEFAULT_LONGITUDINAL_GAINS = PidGains(
    kp=0.8, ki=0.05, kd=0.8, out_min=-6.0, out_max=3.0, integral_max=5.0, derivative_tau=0.1
)
DEFAULT_LATERAL_GAINS = PidGains(kp=1.2, ki=0.0, kd=0.3, out_min=-0.6, out_max=0.6, integral_max=5.0)


@dataclass(frozen=True)
class FollowerConfig:
    gap_setpoint: float = 8.0
    lost_track_timeout: int = 1_000_000_000  # ns
    lookahead: float = 5.0
    trail_capacity: int = DEFAULT_TRAIL_CAPACITY

    def __post_init__(self):
        if self.gap_setpoint <= 0:
            raise ValueError(f"gap_setpoint must be positive, got {self.gap_setpoint}")
        if self.lost_track_timeout <= 0:
            raise ValueError(f"lost_track_timeout must be positive, got {self.lost_track_timeout}")
        if self.lookahead < 0:
            raise ValueError(f"lookahead must be >= 0, got {self.lookahead}")


def longitudinal_control(
    own: VehicleState, trail: LeaderTrail, cfg: FollowerConfig, gains: PidGains, state: PidState, dt: float
) -> Tuple[float, PidState]:
    target = trail.newest()
    if target is None:
        return 0.0, state
    error = math.hypot(target.x - own.x, target.y - own.y) - cfg.gap_setpoint
    return pid_step(gains, state, error, dt)


def select_target(own: VehicleState, trail: LeaderTrail, lookahead: float) -> Optional[Waypoint]:
    # walk back from the newest waypoint while points stay far enough ahead;
    # the last one that qualified is the oldest of that run
    ch, sh = math.cos(own.heading), math.sin(own.heading)
    target = None
    for wp in reversed(trail.waypoints):
        dx, dy = wp.x - own.x, wp.y - own.y
        if dx * ch + dy * sh <= 0.0 or math.hypot(dx, dy) < lookahead:
            break
        target = wp
    return target if target is not None else trail.newest()


def bearing_error(own: VehicleState, target: Waypoint) -> float:
    return normalize_angle(math.atan2(target.y - own.y, target.x - own.x) - own.heading)


def lateral_control(
    own: VehicleState, trail: LeaderTrail, cfg: FollowerConfig, gains: PidGains, state: PidState, dt: float
) -> Tuple[float, PidState]:
    target = select_target(own, trail, cfg.lookahead)
    if target is None:
        return 0.0, state
    return pid_step(gains, state, bearing_error(own, target), dt)


def lost_track_check(trail: LeaderTrail, now: int, cfg: FollowerConfig, engaged: bool = False) -> bool:
    if trail.last_cam_time is None:
        return engaged
    return now - trail.last_cam_time > cfg.lost_track_timeout


class FollowerController:
    """
    Per-vehicle controller wired to /carN/cam. Only CAMs from the predecessor's
    station feed the trail.
    """

    def __init__(
        self,
        vehicle_id: int,
        predecessor_id: int,
        params: VehicleParams,
        cfg: FollowerConfig,
        bus: MessageBus,
        longitudinal_gains: PidGains = DEFAULT_LONGITUDINAL_GAINS,
        lateral_gains: PidGains = DEFAULT_LATERAL_GAINS,
    ):
        self.vehicle_id = vehicle_id
        self.predecessor_id = predecessor_id
        self.params = params
        self.cfg = cfg
        self.longitudinal_gains = longitudinal_gains
        self.lateral_gains = lateral_gains
        self.trail = LeaderTrail(cfg.trail_capacity)
        self.longitudinal_state = PidState()
        self.lateral_state = PidState()
        self.engaged = False
        self.stopping = False
        self.stop_declared_at: Optional[int] = None
        self.lost_track_events = 0
        bus.subscribe(cam_topic(vehicle_id), self._on_cam)

    def _on_cam(self, msg: BusMessage) -> None:
        rx: ReceivedCam = msg.payload
        if rx.cam.station_id != self.predecessor_id:
            return
        on_cam_received(self.trail, rx.cam, rx.receive_time)
        if not self.engaged and self.trail.last_speed_value > 0:
            self.engaged = True
            logger.info("car%d engaged platooning behind car%d", self.vehicle_id, self.predecessor_id)

    def _braking(self) -> Actuation:
        return Actuation(accel=self.params.min_accel, steer=0.0)

    def control(self, own: VehicleState, now: int, dt: int) -> Actuation:
        if self.stopping:
            last = self.trail.last_cam_time
            fresh = last is not None and last > self.stop_declared_at
            if not (fresh and own.speed <= 0.0):
                return self._braking()
            self.stopping = False
            self.longitudinal_state = PidState()
            self.lateral_state = PidState()
            logger.info("car%d reacquired car%d at %.3fs", self.vehicle_id, self.predecessor_id, nanos_to_seconds(now))

        # a follower still parked behind a parked leader is not tracking anything yet
        if self.engaged and lost_track_check(self.trail, now, self.cfg, self.engaged):
            self.stopping = True
            self.stop_declared_at = now
            self.lost_track_events += 1
            logger.info("car%d lost track of car%d at %.3fs", self.vehicle_id, self.predecessor_id, nanos_to_seconds(now))
            return self._braking()

        if not self.engaged:
            return Actuation()

        dt_s = nanos_to_seconds(dt)
        accel, self.longitudinal_state = longitudinal_control(
            own, self.trail, self.cfg, self.longitudinal_gains, self.longitudinal_state, dt_s
        )
        steer, self.lateral_state = lateral_control(
            own, self.trail, self.cfg, self.lateral_gains, self.lateral_state, dt_s
        )
        return Actuation(accel=accel, steer=steer)
