# itsg5 package - CA service, CAM codec, broadcast channel, mobility
from .cam import FRAME_LEN, Cam, CamCodecError, EncodedFrame, cam_decode, cam_encode
from .vdp import heading_to_compass, vdp_sample
from .ca_service import CaService, CaServiceConfig, ca_service_step
from .channel import BroadcastChannel, ChannelConfig, ChannelStats, Delivery, channel_transmit
from .mobility import MobilityTable
from .middleware import ReceivedCam, RobotMiddleware, cam_topic, node_name

__all__ = [
    "FRAME_LEN",
    "Cam",
    "CamCodecError",
    "EncodedFrame",
    "cam_decode",
    "cam_encode",
    "heading_to_compass",
    "vdp_sample",
    "CaService",
    "CaServiceConfig",
    "ca_service_step",
    "BroadcastChannel",
    "ChannelConfig",
    "ChannelStats",
    "Delivery",
    "channel_transmit",
    "MobilityTable",
    "ReceivedCam",
    "RobotMiddleware",
    "cam_topic",
    "node_name",
]
