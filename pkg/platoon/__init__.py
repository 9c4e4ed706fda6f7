# platoon package - PID, leader trail, follower and leader controllers
from .pid import PidGains, PidState, pid_step
from .trail import DEFAULT_TRAIL_CAPACITY, LeaderTrail, Waypoint, on_cam_received
from .follower import (
    DEFAULT_LATERAL_GAINS,
    DEFAULT_LONGITUDINAL_GAINS,
    FollowerConfig,
    FollowerController,
    bearing_error,
    lateral_control,
    longitudinal_control,
    lost_track_check,
    select_target,
)
from .leader import LeaderDriver, SpeedSegment

__all__ = [
    "PidGains",
    "PidState",
    "pid_step",
    "DEFAULT_TRAIL_CAPACITY",
    "LeaderTrail",
    "Waypoint",
    "on_cam_received",
    "DEFAULT_LATERAL_GAINS",
    "DEFAULT_LONGITUDINAL_GAINS",
    "FollowerConfig",
    "FollowerController",
    "bearing_error",
    "lateral_control",
    "longitudinal_control",
    "lost_track_check",
    "select_target",
    "LeaderDriver",
    "SpeedSegment",
]
