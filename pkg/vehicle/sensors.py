from dataclasses import replace
from typing import Sequence, Union

import numpy as np

from .dynamics import OdometrySample


class SensorNoise:
    """Additive Gaussian noise on position and speed. Off when both std are 0."""

    def __init__(self, position_std: float = 0.0, speed_std: float = 0.0, seed: Union[int, Sequence[int]] = 0):
        if position_std < 0 or speed_std < 0:
            raise ValueError("noise standard deviations must be >= 0")
        self.position_std = position_std
        self.speed_std = speed_std
        self._rng = np.random.default_rng(seed)

    @property
    def enabled(self) -> bool:
        return self.position_std > 0 or self.speed_std > 0

    def apply(self, sample: OdometrySample) -> OdometrySample:
        if not self.enabled:
            return sample
        dx, dy = self._rng.normal(0.0, self.position_std, 2) if self.position_std > 0 else (0.0, 0.0)
        dv = self._rng.normal(0.0, self.speed_std) if self.speed_std > 0 else 0.0
        return replace(
            sample,
            x=sample.x + float(dx),
            y=sample.y + float(dy),
            speed=max(0.0, sample.speed + float(dv)),
        )
