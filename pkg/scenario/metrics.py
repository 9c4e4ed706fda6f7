"""
Per-tick metrics, run summaries, and their CSV files.

metrics.csv:  iteration,time_s,gap1_m,steer1_rad,speed1_mps,lost1,gap2_m,...
summary.csv:  one row per (run, follower), columns in SUMMARY_COLUMNS.
Floats are written with 9 significant digits, flags as 0/1.
"""

import csv
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from cosim_core import nanos_to_seconds

DEFAULT_FOLLOWER_COUNT = 2

SUMMARY_COLUMNS = [
    "cam_hz",
    "seed",
    "loss_prob",
    "follower",
    "vehicle_id",
    "rms_gap_error_m",
    "max_gap_m",
    "min_gap_m",
    "steer_std_rad",
    "lost_track_events",
    "cams_sent",
    "cams_received",
    "cams_dropped",
    "cams_out_of_range",
]


class OutputError(OSError):
    """CSV output could not be written; the message starts with the path."""


@dataclass(frozen=True)
class FollowerSample:
    gap: float
    steer: float
    speed: float
    lost: bool


@dataclass(frozen=True)
class MetricsRecord:
    iteration: int
    time: int  # ns
    followers: Tuple[FollowerSample, ...]

    @property
    def time_s(self) -> float:
        return nanos_to_seconds(self.time)


@dataclass(frozen=True)
class FollowerStats:
    follower: int  # 1-based position behind the leader
    vehicle_id: int
    rms_gap_error_m: float = 0.0
    max_gap_m: float = 0.0
    min_gap_m: float = 0.0
    steer_std_rad: float = 0.0
    lost_track_events: int = 0


@dataclass
class RunSummary:
    cam_hz: float
    seed: int
    loss_prob: float
    followers: List[FollowerStats] = field(default_factory=list)
    # channel-wide counters; received = deliveries accepted by the channel
    cams_sent: int = 0
    cams_received: int = 0
    cams_dropped: int = 0
    cams_out_of_range: int = 0
    receivers_per_cam: int = 0

    def accounting_holds(self) -> bool:
        return self.cams_sent * self.receivers_per_cam == (
            self.cams_received + self.cams_dropped + self.cams_out_of_range
        )

    def rows(self) -> List[list]:
        return [
            [
                self.cam_hz,
                self.seed,
                self.loss_prob,
                f.follower,
                f.vehicle_id,
                f.rms_gap_error_m,
                f.max_gap_m,
                f.min_gap_m,
                f.steer_std_rad,
                f.lost_track_events,
                self.cams_sent,
                self.cams_received,
                self.cams_dropped,
                self.cams_out_of_range,
            ]
            for f in self.followers
        ]


def follower_stats(
    records: Sequence[MetricsRecord],
    index: int,
    vehicle_id: int,
    gap_setpoint: float,
    settle: int,
    lost_track_events: int = 0,
) -> FollowerStats:
    """Statistics for follower `index` (0-based) over records at or after `settle` ns."""
    window = [r.followers[index] for r in records if r.time >= settle]
    if not window:
        return FollowerStats(follower=index + 1, vehicle_id=vehicle_id, lost_track_events=lost_track_events)
    gaps = np.array([s.gap for s in window], dtype=float)
    steers = np.array([s.steer for s in window], dtype=float)
    return FollowerStats(
        follower=index + 1,
        vehicle_id=vehicle_id,
        rms_gap_error_m=float(np.sqrt(np.mean((gaps - gap_setpoint) ** 2))),
        max_gap_m=float(gaps.max()),
        min_gap_m=float(gaps.min()),
        steer_std_rad=float(np.std(steers)),
        lost_track_events=lost_track_events,
    )


def metrics_header(n_followers: int) -> List[str]:
    header = ["iteration", "time_s"]
    for i in range(1, n_followers + 1):
        header += [f"gap{i}_m", f"steer{i}_rad", f"speed{i}_mps", f"lost{i}"]
    return header


def format_value(value: Union[bool, int, float, str]) -> str:
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        if value == 0.0:  # also folds -0.0
            return "0"
        return f"{value:.9g}"
    return str(value)


def _record_row(record: MetricsRecord) -> List[str]:
    row = [format_value(record.iteration), format_value(record.time_s)]
    for s in record.followers:
        row += [format_value(s.gap), format_value(s.steer), format_value(s.speed), format_value(s.lost)]
    return row


def _write_csv(path: Union[str, Path], header: List[str], rows: Iterable[List[str]]) -> None:
    path = Path(path)
    try:
        with open(path, "w", newline="", encoding="utf-8") as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(header)
            writer.writerows(rows)
    except OSError as e:
        raise OutputError(f"{path}: {e.strerror or e}") from e


def emit_metrics(
    records: Sequence[MetricsRecord], path: Union[str, Path], n_followers: Optional[int] = None
) -> None:
    if n_followers is None:
        n_followers = len(records[0].followers) if records else DEFAULT_FOLLOWER_COUNT
    _write_csv(path, metrics_header(n_followers), (_record_row(r) for r in records))


def emit_summary(summaries: Sequence[RunSummary], path: Union[str, Path]) -> None:
    rows = ([format_value(v) for v in row] for s in summaries for row in s.rows())
    _write_csv(path, SUMMARY_COLUMNS, rows)
