"""
Cooperative Awareness Message in field form and its 18-byte wire form.

Wire layout, big-endian:
    [0..4)   station_id              u32
    [4..6)   generation_delta_time   u16  (ms mod 65536)
    [6..10)  x_cm                    i32
    [10..14) y_cm                    i32
    [14..16) heading_value           u16  (deci-degrees, 0 = north/+y, clockwise)
    [16..18) speed_value             u16  (cm/s)
"""

import struct
from dataclasses import dataclass

FRAME_LEN = 18
_LAYOUT = struct.Struct(">IHiiHH")

U16_MAX = 0xFFFF
U32_MAX = 0xFFFFFFFF
I32_MIN = -(1 << 31)
I32_MAX = (1 << 31) - 1
HEADING_MODULUS = 3600
GENERATION_DELTA_MODULUS = 1 << 16


class CamCodecError(ValueError):
    pass


@dataclass(frozen=True)
class Cam:
    station_id: int = 0
    generation_delta_time: int = 0
    x_cm: int = 0
    y_cm: int = 0
    heading_value: int = 0
    speed_value: int = 0

    def violations(self) -> list:
        problems = []
        if not 0 <= self.station_id <= U32_MAX:
            problems.append(f"station_id={self.station_id} outside u32")
        if not 0 <= self.generation_delta_time < GENERATION_DELTA_MODULUS:
            problems.append(f"generation_delta_time={self.generation_delta_time} outside [0, 65536)")
        for name in ("x_cm", "y_cm"):
            value = getattr(self, name)
            if not I32_MIN <= value <= I32_MAX:
                problems.append(f"{name}={value} outside i32")
        if not 0 <= self.heading_value < HEADING_MODULUS:
            problems.append(f"heading_value={self.heading_value} outside [0, 3600)")
        if not 0 <= self.speed_value <= U16_MAX:
            problems.append(f"speed_value={self.speed_value} outside u16")
        return problems


EncodedFrame = bytes


def cam_encode(cam: Cam) -> EncodedFrame:
    problems = cam.violations()
    if problems:
        raise CamCodecError("invalid CAM: " + "; ".join(problems))
    return _LAYOUT.pack(
        cam.station_id,
        cam.generation_delta_time,
        cam.x_cm,
        cam.y_cm,
        cam.heading_value,
        cam.speed_value,
    )


def cam_decode(frame: EncodedFrame) -> Cam:
    if len(frame) != FRAME_LEN:
        raise CamCodecError(f"CAM frame must be {FRAME_LEN} bytes, got {len(frame)}")
    station_id, gdt, x_cm, y_cm, heading, speed = _LAYOUT.unpack(frame)
    if heading >= HEADING_MODULUS:
        raise CamCodecError(f"corrupt CAM frame: heading_value={heading} >= 3600")
    return Cam(
        station_id=station_id,
        generation_delta_time=gdt,
        x_cm=x_cm,
        y_cm=y_cm,
        heading_value=heading,
        speed_value=speed,
    )
