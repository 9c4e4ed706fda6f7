"""
Scenario configuration: YAML on disk, pydantic models in memory.

Durations are seconds in the file; the *_ns properties give the integer
nanosecond values the simulation runs on.
"""

import logging
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional, Union

import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError, ValidationInfo, field_validator

from cosim_core import hz_to_period, seconds_to_nanos
from itsg5 import ChannelConfig
from platoon import FollowerConfig, PidGains, SpeedSegment
from vehicle import VehicleParams, VehicleState

logger = logging.getLogger(__name__)


class ConfigError(ValueError):
    """Invalid scenario configuration; the message lists `field.path: reason` lines."""


class _Section(BaseModel):
    model_config = ConfigDict(extra="forbid")


class VehicleParamsModel(_Section):
    wheelbase: float = Field(default=2.7, gt=0)
    max_speed: float = Field(default=30.0, gt=0)
    max_accel: float = Field(default=3.0, gt=0)
    min_accel: float = Field(default=-6.0, lt=0)
    max_steer: float = Field(default=0.6, gt=0)

    def to_params(self) -> VehicleParams:
        return VehicleParams(**self.model_dump())


class VehicleSpec(_Section):
    id: int = Field(ge=1, le=0xFFFFFFFF)
    role: Literal["leader", "follower"]
    predecessor: Optional[int] = None
    x: float = 0.0
    y: float = 0.0
    heading: float = 0.0
    params: VehicleParamsModel = Field(default_factory=VehicleParamsModel)

    def initial_state(self) -> VehicleState:
        # platooning starts from a parked position
        return VehicleState(x=self.x, y=self.y, heading=self.heading, speed=0.0)


class SegmentModel(_Section):
    duration_s: float = Field(gt=0)
    target_speed: float = Field(ge=0)
    steer: float = 0.0

    def to_segment(self) -> SpeedSegment:
        return SpeedSegment(
            duration=seconds_to_nanos(self.duration_s), target_speed=self.target_speed, steer=self.steer
        )


def _default_profile() -> List[SegmentModel]:
    return [
        SegmentModel(duration_s=2.0, target_speed=0.0),
        SegmentModel(duration_s=62.0, target_speed=5.0),
        SegmentModel(duration_s=20.0, target_speed=5.0, steer=0.05),
        SegmentModel(duration_s=36.0, target_speed=5.0),
    ]


class LeaderSection(_Section):
    speed_gain: float = Field(default=0.5, gt=0)
    profile: List[SegmentModel] = Field(default_factory=_default_profile, min_length=1)


class ChannelSection(_Section):
    delay_fixed_s: float = Field(default=0.001, ge=0)
    delay_jitter_s: float = Field(default=0.0, ge=0)
    loss_prob: float = Field(default=0.0, ge=0, le=1)
    range_m: float = Field(default=300.0, gt=0)


class FollowerSection(_Section):
    lost_track_timeout_s: float = Field(default=1.0, gt=0)
    lookahead_m: float = Field(default=5.0, ge=0)
    trail_capacity: int = Field(default=256, ge=1)


class PidGainsModel(_Section):
    kp: float = 0.0
    ki: float = 0.0
    kd: float = 0.0
    out_min: float = -1.0
    out_max: float = 1.0
    integral_max: float = Field(default=5.0, gt=0)
    derivative_tau: float = Field(default=0.0, ge=0)

    @field_validator("out_max")
    @classmethod
    def _bounds_ordered(cls, v: float, info: ValidationInfo) -> float:
        lo = info.data.get("out_min")
        if lo is not None and not lo < v:
            raise ValueError(f"out_max ({v}) must be greater than out_min ({lo})")
        return v

    def to_gains(self) -> PidGains:
        return PidGains(**self.model_dump())


class GainsSection(_Section):
    longitudinal: PidGainsModel = Field(
        default_factory=lambda: PidGainsModel(
            kp=0.8, ki=0.05, kd=0.8, out_min=-6.0, out_max=3.0, integral_max=5.0, derivative_tau=0.1
        )
    )
    lateral: PidGainsModel = Field(
        default_factory=lambda: PidGainsModel(kp=1.2, ki=0.0, kd=0.3, out_min=-0.6, out_max=0.6, integral_max=5.0)
    )


class SensorNoiseSection(_Section):
    position_std: float = Field(default=0.0, ge=0)
    speed_std: float = Field(default=0.0, ge=0)


def _default_vehicles() -> List[VehicleSpec]:
    return [
        VehicleSpec(id=1, role="leader", x=20.0),
        VehicleSpec(id=2, role="follower", predecessor=1, x=10.0),
        VehicleSpec(id=3, role="follower", predecessor=2, x=0.0),
    ]


class ScenarioConfig(_Section):
    seed: int = Field(default=1, ge=0)
    duration_s: float = Field(default=120.0, ge=0)
    tick_period_s: float = Field(default=0.02, gt=0)
    cam_hz: float = Field(default=10.0, gt=0)
    settle_s: float = Field(default=30.0, ge=0)
    gap_setpoint_m: float = Field(default=8.0, gt=0)
    channel: ChannelSection = Field(default_factory=ChannelSection)
    follower: FollowerSection = Field(default_factory=FollowerSection)
    gains: GainsSection = Field(default_factory=GainsSection)
    sensor_noise: SensorNoiseSection = Field(default_factory=SensorNoiseSection)
    leader: LeaderSection = Field(default_factory=LeaderSection)
    vehicles: List[VehicleSpec] = Field(default_factory=_default_vehicles, min_length=2)

    @field_validator("cam_hz")
    @classmethod
    def _cam_period_divisible(cls, v: float, info: ValidationInfo) -> float:
        tick_s = info.data.get("tick_period_s")
        if tick_s is None:
            return v
        tick = seconds_to_nanos(tick_s)
        period = hz_to_period(v)
        if tick <= 0 or period % tick != 0:
            raise ValueError(
                f"CAM period {period}ns ({v} Hz) is not a multiple of the tick period {tick}ns"
            )
        return v

    @field_validator("vehicles")
    @classmethod
    def _platoon_is_chain(cls, v: List[VehicleSpec]) -> List[VehicleSpec]:
        ids = [spec.id for spec in v]
        if len(set(ids)) != len(ids):
            raise ValueError(f"vehicle ids must be unique, got {ids}")
        leaders = [spec.id for spec in v if spec.role == "leader"]
        if len(leaders) != 1:
            raise ValueError(f"exactly one leader required, found {len(leaders)} ({leaders})")
        successors: Dict[int, int] = {}
        for spec in v:
            if spec.role == "leader":
                if spec.predecessor is not None:
                    raise ValueError(f"leader {spec.id} cannot have a predecessor")
                continue
            if spec.predecessor is None:
                raise ValueError(f"follower {spec.id} needs a predecessor")
            if spec.predecessor not in ids:
                raise ValueError(f"follower {spec.id} follows unknown vehicle {spec.predecessor}")
            if spec.predecessor in successors:
                raise ValueError(
                    f"vehicles {successors[spec.predecessor]} and {spec.id} both follow {spec.predecessor}"
                )
            successors[spec.predecessor] = spec.id
        # walk from the leader; anything left over sits on a cycle
        seen = [leaders[0]]
        while seen[-1] in successors:
            seen.append(successors[seen[-1]])
        if len(seen) != len(ids):
            raise ValueError(f"predecessor graph is not a single chain from leader {leaders[0]}")
        return v

    @property
    def tick_period_ns(self) -> int:
        return seconds_to_nanos(self.tick_period_s)

    @property
    def duration_ns(self) -> int:
        return seconds_to_nanos(self.duration_s)

    @property
    def settle_ns(self) -> int:
        return seconds_to_nanos(self.settle_s)

    @property
    def n_ticks(self) -> int:
        return self.duration_ns // self.tick_period_ns

    def leader_spec(self) -> VehicleSpec:
        return next(spec for spec in self.vehicles if spec.role == "leader")

    def chain(self) -> List[VehicleSpec]:
        """Vehicles in platoon order, leader first."""
        by_pred = {spec.predecessor: spec for spec in self.vehicles if spec.role == "follower"}
        order = [self.leader_spec()]
        while order[-1].id in by_pred:
            order.append(by_pred[order[-1].id])
        return order

    def followers(self) -> List[VehicleSpec]:
        return self.chain()[1:]

    def channel_config(self) -> ChannelConfig:
        return ChannelConfig(
            delay_fixed=seconds_to_nanos(self.channel.delay_fixed_s),
            delay_jitter=seconds_to_nanos(self.channel.delay_jitter_s),
            loss_prob=self.channel.loss_prob,
            range_m=self.channel.range_m,
            rng_seed=self.seed,
        )

    def follower_config(self) -> FollowerConfig:
        return FollowerConfig(
            gap_setpoint=self.gap_setpoint_m,
            lost_track_timeout=seconds_to_nanos(self.follower.lost_track_timeout_s),
            lookahead=self.follower.lookahead_m,
            trail_capacity=self.follower.trail_capacity,
        )


def format_validation_error(exc: ValidationError) -> str:
    lines = []
    for err in exc.errors():
        path = ".".join(str(part) for part in err["loc"]) or "<root>"
        lines.append(f"{path}: {err['msg']}")
    return "\n".join(lines)


def validate_config(data: Dict[str, Any]) -> ScenarioConfig:
    try:
        return ScenarioConfig.model_validate(data)
    except ValidationError as e:
        raise ConfigError(format_validation_error(e)) from e


def load_config(path: Union[str, Path]) -> ScenarioConfig:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ConfigError(f"{path}: cannot read config ({e.strerror or e})") from e
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as e:
        raise ConfigError(f"{path}: invalid YAML: {e}") from e
    if data is None:
        data = {}
    if not isinstance(data, dict):
        raise ConfigError(f"{path}: top level must be a mapping, got {type(data).__name__}")
    try:
        cfg = validate_config(data)
    except ConfigError as e:
        raise ConfigError(f"{path}:\n{e}") from e
    logger.info("Loaded scenario %s (%d vehicles, %.1f Hz)", path, len(cfg.vehicles), cfg.cam_hz)
    return cfg


def apply_overrides(cfg: ScenarioConfig, **fields: Any) -> ScenarioConfig:
    """
    Return a re-validated copy with fields replaced. Keys are dotted paths
    ("channel.loss_prob") or top-level names; None values are skipped.
    """
    data = cfg.model_dump()
    for key, value in fields.items():
        if value is None:
            continue
        *parents, leaf = key.split(".")
        node = data
        for part in parents:
            if not isinstance(node.get(part), dict):
                raise ConfigError(f"{key}: unknown config section {part!r}")
            node = node[part]
        node[leaf] = value
    return validate_config(data)
