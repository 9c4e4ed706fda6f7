from typing import Dict, Tuple

from vehicle import OdometrySample

Position = Tuple[float, float]


class MobilityTable:
    """Latest known position of each network node, used for range checks."""

    def __init__(self):
        self._positions: Dict[str, Position] = {}

    def mobility_update(self, node_id: str, odom: OdometrySample) -> None:
        self._positions[node_id] = (odom.x, odom.y)

    def positions(self) -> Dict[str, Position]:
        return dict(self._positions)
