import math

import numpy as np
import pytest

from itsg5 import FRAME_LEN, Cam, CamCodecError, cam_decode, cam_encode, heading_to_compass, vdp_sample
from vehicle import OdometrySample


def _random_cams(rng: np.random.Generator, n: int):
    for _ in range(n):
        yield Cam(
            station_id=int(rng.integers(0, 1 << 32)),
            generation_delta_time=int(rng.integers(0, 1 << 16)),
            x_cm=int(rng.integers(-(1 << 31), 1 << 31)),
            y_cm=int(rng.integers(-(1 << 31), 1 << 31)),
            heading_value=int(rng.integers(0, 3600)),
            speed_value=int(rng.integers(0, 1 << 16)),
        )


class TestCamCodec:
    """Wire format: 18 bytes, big-endian, fixed field order"""

    def test_all_zero_cam(self):
        assert cam_encode(Cam()) == bytes(FRAME_LEN)
        assert cam_decode(bytes(FRAME_LEN)) == Cam()

    def test_station_id_leads_the_frame(self):
        assert cam_encode(Cam(station_id=1)) == b"\x00\x00\x00\x01" + bytes(14)

    def test_heading_is_big_endian(self):
        frame = cam_encode(Cam(heading_value=900))
        assert frame[14:16] == b"\x03\x84"

    def test_negative_coordinates(self):
        cam = Cam(x_cm=-1, y_cm=-(1 << 31))
        frame = cam_encode(cam)

        assert frame[6:10] == b"\xff\xff\xff\xff"
        assert cam_decode(frame) == cam

    def test_random_round_trip(self):
        rng = np.random.default_rng(18)
        for cam in _random_cams(rng, 10_000):
            assert cam_decode(cam_encode(cam)) == cam

    def test_short_frame_rejected(self):
        with pytest.raises(CamCodecError, match="18 bytes"):
            cam_decode(bytes(17))

    def test_corrupt_heading_rejected(self):
        frame = bytes(14) + (3600).to_bytes(2, "big") + bytes(2)
        with pytest.raises(CamCodecError, match="heading"):
            cam_decode(frame)

    @pytest.mark.parametrize(
        "cam",
        [
            Cam(station_id=-1),
            Cam(generation_delta_time=65536),
            Cam(x_cm=1 << 31),
            Cam(heading_value=3600),
            Cam(speed_value=70_000),
        ],
    )
    def test_invalid_cam_not_encoded(self, cam):
        with pytest.raises(CamCodecError):
            cam_encode(cam)


class TestVehicleDataProvider:
    def _odom(self, **kwargs):
        base = dict(x=0.0, y=0.0, heading=0.0, speed=0.0, stamp=0)
        base.update(kwargs)
        return OdometrySample(**base)

    def test_scale_factors(self):
        cam = vdp_sample(self._odom(x=1.0, speed=5.0), station_id=2, now=0)

        assert cam.x_cm == 100
        assert cam.speed_value == 500
        assert cam.station_id == 2

    def test_east_is_compass_900(self):
        assert vdp_sample(self._odom(), 1, 0).heading_value == 900

    def test_compass_convention(self):
        assert heading_to_compass(math.pi / 2) == 0  # north
        assert heading_to_compass(math.pi) == 2700  # west
        assert heading_to_compass(-math.pi / 2) == 1800  # south

    def test_generation_delta_time_wraps(self):
        assert vdp_sample(self._odom(), 1, 65_536_000_000).generation_delta_time == 0
        assert vdp_sample(self._odom(), 1, 100_000_000).generation_delta_time == 100

    def test_out_of_range_values_saturate(self):
        cam = vdp_sample(self._odom(x=1e9, y=-1e9, speed=1_000.0), 1, 0)

        assert cam.x_cm == (1 << 31) - 1
        assert cam.y_cm == -(1 << 31)
        assert cam.speed_value == 0xFFFF
