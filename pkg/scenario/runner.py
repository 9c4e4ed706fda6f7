"""
Wires one platoon scenario into the co-simulation kernel and runs it.

Per tick, at t = current horizon:
    mobility update -> CAM generation + channel -> drain events <= t
    -> leader profile / follower control -> physics step
    -> advance_tick (publishes /clock, vehicles publish odometry) -> record
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from cosim_core import CoSimKernel
from itsg5 import BroadcastChannel, CaService, CaServiceConfig, MobilityTable, RobotMiddleware
from obs.run_trace import RunTrace, with_span
from platoon import FollowerController, LeaderDriver
from vehicle import Actuation, SensorNoise, SimVehicle

from .config import ScenarioConfig, VehicleSpec
from .metrics import FollowerSample, MetricsRecord, RunSummary, follower_stats

logger = logging.getLogger(__name__)


@dataclass
class Platoon:
    cfg: ScenarioConfig
    kernel: CoSimKernel
    channel: BroadcastChannel
    mobility: MobilityTable
    chain: List[VehicleSpec]
    leader: LeaderDriver
    vehicles: Dict[int, SimVehicle] = field(default_factory=dict)
    middleware: Dict[int, RobotMiddleware] = field(default_factory=dict)
    followers: Dict[int, FollowerController] = field(default_factory=dict)

    def gap(self, follower: VehicleSpec) -> float:
        own = self.vehicles[follower.id].state
        pred = self.vehicles[follower.predecessor].state
        return math.hypot(pred.x - own.x, pred.y - own.y)


def build_platoon(cfg: ScenarioConfig, record_trace: bool = False) -> Platoon:
    tick = cfg.tick_period_ns
    kernel = CoSimKernel(tick, record_trace=record_trace)
    ca_cfg = CaServiceConfig(generation_hz=cfg.cam_hz)
    ca_cfg.check_tick(tick)
    chain = cfg.chain()
    leader_spec = chain[0]
    platoon = Platoon(
        cfg=cfg,
        kernel=kernel,
        channel=BroadcastChannel(cfg.channel_config(), kernel),
        mobility=MobilityTable(),
        chain=chain,
        leader=LeaderDriver(
            [seg.to_segment() for seg in cfg.leader.profile],
            cfg.leader.speed_gain,
            leader_spec.params.to_params(),
        ),
    )

    # subscription order is delivery order: vehicles (clock), middleware (odom), controllers (cam)
    noise_cfg = cfg.sensor_noise
    for spec in chain:
        noise = None
        if noise_cfg.position_std > 0 or noise_cfg.speed_std > 0:
            noise = SensorNoise(noise_cfg.position_std, noise_cfg.speed_std, seed=[cfg.seed, spec.id])
        platoon.vehicles[spec.id] = SimVehicle(
            spec.id, spec.initial_state(), spec.params.to_params(), kernel.bus, noise=noise
        )
    for spec in chain:
        platoon.middleware[spec.id] = RobotMiddleware(
            spec.id, kernel, platoon.channel, platoon.mobility, CaService(spec.id, ca_cfg)
        )
    follower_cfg = cfg.follower_config()
    for spec in chain[1:]:
        platoon.followers[spec.id] = FollowerController(
            spec.id,
            spec.predecessor,
            spec.params.to_params(),
            follower_cfg,
            kernel.bus,
            longitudinal_gains=cfg.gains.longitudinal.to_gains(),
            lateral_gains=cfg.gains.lateral.to_gains(),
        )
    return platoon


def step_platoon(platoon: Platoon) -> MetricsRecord:
    kernel = platoon.kernel
    now = kernel.horizon
    tick = kernel.period

    for mw in platoon.middleware.values():
        mw.update_mobility()
    for mw in platoon.middleware.values():
        mw.generate(now)
    kernel.run_until(now)

    actuations: Dict[int, Actuation] = {}
    for spec in platoon.chain:
        state = platoon.vehicles[spec.id].state
        if spec.role == "leader":
            actuations[spec.id] = platoon.leader.actuation(state, now)
        else:
            actuations[spec.id] = platoon.followers[spec.id].control(state, now, tick)
    for spec in platoon.chain:
        platoon.vehicles[spec.id].apply(actuations[spec.id], tick)

    kernel.advance_tick()

    samples = []
    for spec in platoon.chain[1:]:
        vehicle = platoon.vehicles[spec.id]
        samples.append(
            FollowerSample(
                gap=platoon.gap(spec),
                steer=vehicle.last_actuation.steer,
                speed=vehicle.state.speed,
                lost=platoon.followers[spec.id].stopping,
            )
        )
    return MetricsRecord(iteration=kernel.ticks, time=kernel.horizon, followers=tuple(samples))


def summarize(platoon: Platoon, records: List[MetricsRecord]) -> RunSummary:
    cfg = platoon.cfg
    stats = platoon.channel.stats
    return RunSummary(
        cam_hz=cfg.cam_hz,
        seed=cfg.seed,
        loss_prob=cfg.channel.loss_prob,
        followers=[
            follower_stats(
                records,
                i,
                spec.id,
                cfg.gap_setpoint_m,
                cfg.settle_ns,
                lost_track_events=platoon.followers[spec.id].lost_track_events,
            )
            for i, spec in enumerate(platoon.chain[1:])
        ],
        cams_sent=stats.sent,
        cams_received=stats.delivered,
        cams_dropped=stats.dropped,
        cams_out_of_range=stats.out_of_range,
        receivers_per_cam=len(platoon.chain) - 1,
    )


def run_scenario(
    cfg: ScenarioConfig, trace: Optional[RunTrace] = None, record_trace: bool = False
) -> Tuple[List[MetricsRecord], RunSummary]:
    span_input = {"cam_hz": cfg.cam_hz, "seed": cfg.seed, "loss_prob": cfg.channel.loss_prob}
    with with_span(trace, "run_scenario", input_data=span_input) as span:
        platoon = build_platoon(cfg, record_trace=record_trace)
        for vehicle in platoon.vehicles.values():
            vehicle.publish_odometry(platoon.kernel.horizon)

        records = [step_platoon(platoon) for _ in range(cfg.n_ticks)]
        summary = summarize(platoon, records)

        events = sum(f.lost_track_events for f in summary.followers)
        logger.info(
            "Scenario %.1f Hz seed=%d: %d ticks, %d CAMs sent, %d lost-track events",
            cfg.cam_hz,
            cfg.seed,
            len(records),
            summary.cams_sent,
            events,
        )
        span["output"] = {"ticks": len(records), "cams_sent": summary.cams_sent, "lost_track_events": events}
    return records, summary
