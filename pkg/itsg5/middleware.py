"""
Robot Middleware: the network-side node of one vehicle.

  /carN/odom  --(cache)-->  mobility update + CaService  --> channel
  channel delivery event --> decode --> /carN/cam
"""

import logging
from dataclasses import dataclass
from typing import Optional

from cosim_core import BusMessage, CoSimKernel, Event
from vehicle import OdometrySample, odom_topic

from .ca_service import CaService
from .cam import Cam, CamCodecError, cam_decode
from .channel import BroadcastChannel, Delivery
from .mobility import MobilityTable

logger = logging.getLogger(__name__)


def cam_topic(vehicle_id: int) -> str:
    return f"/car{vehicle_id}/cam"


def node_name(vehicle_id: int) -> str:
    return f"node{vehicle_id}"


@dataclass(frozen=True)
class ReceivedCam:
    cam: Cam
    receive_time: int
    sender: str


class RobotMiddleware:
    def __init__(
        self,
        vehicle_id: int,
        kernel: CoSimKernel,
        channel: BroadcastChannel,
        mobility: MobilityTable,
        ca_service: CaService,
    ):
        self.vehicle_id = vehicle_id
        self.node_id = node_name(vehicle_id)
        self.kernel = kernel
        self.channel = channel
        self.mobility = mobility
        self.ca_service = ca_service
        self.latest_odom: Optional[OdometrySample] = None
        self.received = 0
        self.decode_errors = 0
        self._cam_topic = cam_topic(vehicle_id)
        kernel.bus.subscribe(odom_topic(vehicle_id), self._on_odom)
        kernel.register_node(self.node_id, self._on_delivery)

    def _on_odom(self, msg: BusMessage) -> None:
        self.latest_odom = msg.payload

    def update_mobility(self) -> None:
        if self.latest_odom is not None:
            self.mobility.mobility_update(self.node_id, self.latest_odom)

    def generate(self, now: int) -> int:
        """Run the CA service for this tick; returns the number of deliveries scheduled."""
        if self.latest_odom is None:
            return 0
        frame = self.ca_service.step(now, self.latest_odom)
        if frame is None:
            return 0
        return len(self.channel.transmit(frame, self.node_id, self.mobility.positions(), now))

    def _on_delivery(self, event: Event) -> None:
        delivery: Delivery = event.payload
        try:
            cam = cam_decode(delivery.frame)
        except CamCodecError as e:
            self.decode_errors += 1
            logger.warning("%s dropped undecodable frame from %s: %s", self.node_id, delivery.sender, e)
            return
        self.received += 1
        self.kernel.bus.publish(
            self._cam_topic, ReceivedCam(cam=cam, receive_time=self.kernel.now(), sender=delivery.sender)
        )
