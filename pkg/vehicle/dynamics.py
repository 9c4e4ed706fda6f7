"""
Kinematic bicycle model, explicit Euler, fixed step.

    x += v cos(theta) dt
    y += v sin(theta) dt
    theta += (v / L) tan(delta) dt
    v += a dt

Inputs are clamped to the vehicle limits before integration; speed is clamped
to [0, max_speed] afterwards (no reverse gear).
"""

import math
from dataclasses import dataclass
from typing import TYPE_CHECKING, Optional

if TYPE_CHECKING:
    from .sensors import SensorNoise

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class VehicleParams:
    # compact-sedan magnitudes
    wheelbase: float = 2.7
    max_speed: float = 30.0
    max_accel: float = 3.0
    min_accel: float = -6.0
    max_steer: float = 0.6

    def __post_init__(self):
        for name in ("wheelbase", "max_speed", "max_accel", "max_steer"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive, got {getattr(self, name)}")
        if self.min_accel >= 0:
            raise ValueError(f"min_accel must be negative, got {self.min_accel}")


@dataclass(frozen=True)
class VehicleState:
    x: float = 0.0
    y: float = 0.0
    heading: float = 0.0
    speed: float = 0.0


@dataclass(frozen=True)
class Actuation:
    accel: float = 0.0
    steer: float = 0.0


@dataclass(frozen=True)
class OdometrySample:
    x: float
    y: float
    heading: float
    speed: float
    stamp: int  # ns


def normalize_angle(angle: float) -> float:
    """Wrap to (-pi, pi]. In-range values are returned untouched."""
    if -math.pi < angle <= math.pi:
        return angle
    a = math.fmod(angle + math.pi, TWO_PI)
    if a <= 0.0:
        a += TWO_PI
    return a - math.pi


def clamp(value: float, lo: float, hi: float) -> float:
    return lo if value < lo else hi if value > hi else value


def clamp_actuation(u: Actuation, params: VehicleParams) -> Actuation:
    return Actuation(
        accel=clamp(u.accel, params.min_accel, params.max_accel),
        steer=clamp(u.steer, -params.max_steer, params.max_steer),
    )


def step(state: VehicleState, u: Actuation, dt: float, params: VehicleParams) -> VehicleState:
    if dt <= 0:
        raise ValueError(f"dt must be positive, got {dt}")
    u = clamp_actuation(u, params)
    v = state.speed
    theta = state.heading
    x = state.x + v * math.cos(theta) * dt
    y = state.y + v * math.sin(theta) * dt
    if v != 0.0 and u.steer != 0.0:
        theta = theta + (v / params.wheelbase) * math.tan(u.steer) * dt
    new_speed = clamp(v + u.accel * dt, 0.0, params.max_speed)
    return VehicleState(x=x, y=y, heading=normalize_angle(theta), speed=new_speed)


def sensor_read(state: VehicleState, now: int, noise: Optional["SensorNoise"] = None) -> OdometrySample:
    """Odometry as seen by the Vehicle Data Provider; zero latency."""
    sample = OdometrySample(x=state.x, y=state.y, heading=state.heading, speed=state.speed, stamp=now)
    if noise is not None:
        sample = noise.apply(sample)
    return sample

