# Vehicle Data Provider: odometry -> quantized CAM fields
# position in a local planar frame stands in for GPS (x_cm, y_cm)
import math

from cosim_core.simtime import nanos_to_millis
from vehicle import OdometrySample

from .cam import GENERATION_DELTA_MODULUS, HEADING_MODULUS, I32_MAX, I32_MIN, U16_MAX, Cam


def _saturate(value: int, lo: int, hi: int) -> int:
    return lo if value < lo else hi if value > hi else value


def heading_to_compass(heading: float) -> int:
    """Math heading (rad, CCW from +x) -> compass deci-degrees (0 = +y, clockwise)."""
    degrees = (90.0 - math.degrees(heading)) % 360.0
    return int(round(degrees * 10)) % HEADING_MODULUS


def vdp_sample(odom: OdometrySample, station_id: int, now: int) -> Cam:
    return Cam(
        station_id=station_id,
        generation_delta_time=nanos_to_millis(now) % GENERATION_DELTA_MODULUS,
        x_cm=_saturate(int(round(odom.x * 100)), I32_MIN, I32_MAX),
        y_cm=_saturate(int(round(odom.y * 100)), I32_MIN, I32_MAX),
        heading_value=heading_to_compass(odom.heading),
        speed_value=_saturate(int(round(odom.speed * 100)), 0, U16_MAX),
    )
