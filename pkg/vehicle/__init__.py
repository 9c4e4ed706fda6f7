# vehicle package - kinematic vehicle plant and odometry
from .dynamics import (
    Actuation,
    OdometrySample,
    VehicleParams,
    VehicleState,
    clamp_actuation,
    normalize_angle,
    sensor_read,
    step,
)
from .sensors import SensorNoise
from .vehicle import SimVehicle, odom_topic

__all__ = [
    "Actuation",
    "OdometrySample",
    "VehicleParams",
    "VehicleState",
    "clamp_actuation",
    "normalize_angle",
    "sensor_read",
    "step",
    "SensorNoise",
    "SimVehicle",
    "odom_topic",
]
