import logging
from typing import Optional

from cosim_core import CLOCK_TOPIC, BusMessage, MessageBus, nanos_to_seconds

from .dynamics import Actuation, OdometrySample, VehicleParams, VehicleState, clamp_actuation, sensor_read, step
from .sensors import SensorNoise

logger = logging.getLogger(__name__)


def odom_topic(vehicle_id: int) -> str:
    return f"/car{vehicle_id}/odom"


class SimVehicle:
    """
    Physics-side vehicle. The kernel's clock tick triggers the odometry publish,
    so each sample is the post-step state of that tick.
    """

    def __init__(
        self,
        vehicle_id: int,
        state: VehicleState,
        params: VehicleParams,
        bus: MessageBus,
        noise: Optional[SensorNoise] = None,
    ):
        self.vehicle_id = vehicle_id
        self.state = state
        self.params = params
        self.noise = noise
        self.last_actuation = Actuation()
        self.last_odom: Optional[OdometrySample] = None
        self._bus = bus
        self._topic = odom_topic(vehicle_id)
        self._clock_sub = bus.subscribe(CLOCK_TOPIC, self._on_clock)

    def apply(self, u: Actuation, dt: int) -> VehicleState:
        self.last_actuation = clamp_actuation(u, self.params)
        self.state = step(self.state, self.last_actuation, nanos_to_seconds(dt), self.params)
        return self.state

    def publish_odometry(self, now: int) -> OdometrySample:
        self.last_odom = sensor_read(self.state, now, self.noise)
        self._bus.publish(self._topic, self.last_odom)
        return self.last_odom

    def _on_clock(self, msg: BusMessage) -> None:
        self.publish_odometry(msg.payload)

    def detach(self) -> None:
        self._clock_sub.cancel()
