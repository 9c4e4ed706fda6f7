#!/usr/bin/env python3
"""
Platoon co-simulation CLI
Runs the CAM-based platooning scenario and CAM-frequency sweeps, writing CSV metrics
"""

import logging
import sys
from pathlib import Path
from typing import List, Optional

import typer

ROOT = Path(__file__).resolve().parent.parent
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from obs.run_trace import finish_trace, start_trace  # noqa: E402
from scenario import (  # noqa: E402
    ConfigError,
    OutputError,
    ScenarioConfig,
    apply_overrides,
    emit_metrics,
    emit_summary,
    load_config,
    run_scenario,
    run_sweep,
)

app = typer.Typer(help="CAM-based platooning co-simulation")

LOG_FORMAT = "%(asctime)s - %(levelname)s - %(message)s"


def _configure_logging(level: str) -> None:
    numeric = getattr(logging, level.upper(), None)
    if not isinstance(numeric, int):
        typer.echo(f"Error: unknown log level '{level}'", err=True)
        raise typer.Exit(1)
    logging.basicConfig(level=numeric, format=LOG_FORMAT, force=True)


def _parse_list(raw: str, kind: type, flag: str) -> List:
    try:
        values = [kind(part) for part in raw.split(",") if part.strip()]
    except ValueError:
        typer.echo(f"Error: {flag} expects a comma-separated list, got '{raw}'", err=True)
        raise typer.Exit(1)
    if not values:
        typer.echo(f"Error: {flag} is empty", err=True)
        raise typer.Exit(1)
    return values


def _load(config: Path, **overrides) -> ScenarioConfig:
    try:
        return apply_overrides(load_config(config), **overrides)
    except ConfigError as e:
        typer.echo(f"Error: invalid configuration\n{e}", err=True)
        raise typer.Exit(1)


def _output_dir(out: Path) -> Path:
    try:
        out.mkdir(parents=True, exist_ok=True)
    except OSError as e:
        typer.echo(f"Error: cannot create output directory {out}: {e}", err=True)
        raise typer.Exit(1)
    return out


@app.command()
def run(
    config: Path = typer.Option(..., "--config", help="Scenario YAML file"),
    out: Path = typer.Option(..., "--out", help="Output directory"),
    seed: Optional[int] = typer.Option(None, "--seed", help="Override the scenario seed"),
    cam_hz: Optional[float] = typer.Option(None, "--cam-hz", help="Override the CAM generation rate (Hz)"),
    duration: Optional[float] = typer.Option(None, "--duration", help="Override the run duration (s)"),
    loss_prob: Optional[float] = typer.Option(None, "--loss-prob", help="Override the channel loss probability"),
    jitter: Optional[float] = typer.Option(None, "--jitter", help="Override the channel delay jitter (s)"),
    lost_track_timeout: Optional[float] = typer.Option(
        None, "--lost-track-timeout", help="Override the follower lost-track timeout (s)"
    ),
    log_level: str = typer.Option("WARNING", "--log-level", help="Logging level"),
):
    """Run one scenario and write metrics.csv and summary.csv"""
    _configure_logging(log_level)
    cfg = _load(
        config,
        seed=seed,
        cam_hz=cam_hz,
        duration_s=duration,
        **{
            "channel.loss_prob": loss_prob,
            "channel.delay_jitter_s": jitter,
            "follower.lost_track_timeout_s": lost_track_timeout,
        },
    )
    output_dir = _output_dir(out)

    trace = start_trace("run", metadata={"config": str(config), "seed": cfg.seed, "cam_hz": cfg.cam_hz})
    records, summary = run_scenario(cfg, trace=trace)
    try:
        emit_metrics(records, output_dir / "metrics.csv", n_followers=len(cfg.followers()))
        emit_summary([summary], output_dir / "summary.csv")
    except OutputError as e:
        typer.echo(f"Error: {e}", err=True)
        raise typer.Exit(1)
    finish_trace(trace)

    typer.echo("\n=== Scenario Results ===")
    typer.echo(f"CAM rate: {cfg.cam_hz:g} Hz, seed {cfg.seed}, loss {cfg.channel.loss_prob:g}")
    typer.echo(f"Ticks: {len(records)}")
    for f in summary.followers:
        typer.echo(
            f"Follower {f.follower} (car{f.vehicle_id}): RMS gap error {f.rms_gap_error_m:.3f} m, "
            f"gap [{f.min_gap_m:.2f}, {f.max_gap_m:.2f}] m, lost-track events {f.lost_track_events}"
        )
    typer.echo(
        f"CAMs sent {summary.cams_sent}, received {summary.cams_received}, "
        f"dropped {summary.cams_dropped}, out of range {summary.cams_out_of_range}"
    )
    typer.echo(f"\nOutputs written to: {output_dir}")


@app.command()
def sweep(
    config: Path = typer.Option(..., "--config", help="Scenario YAML file"),
    out: Path = typer.Option(..., "--out", help="Output directory"),
    cam_hz: str = typer.Option("10,5,2.5", "--cam-hz", help="Comma-separated CAM rates (Hz)"),
    seeds: str = typer.Option("1,2,3", "--seeds", help="Comma-separated seeds"),
    loss_probs: Optional[str] = typer.Option(None, "--loss-probs", help="Comma-separated loss probabilities"),
    log_level: str = typer.Option("WARNING", "--log-level", help="Logging level"),
):
    """Run the CAM-frequency sweep and write sweep_summary.csv"""
    _configure_logging(log_level)
    cfg = _load(config)
    hz_list = _parse_list(cam_hz, float, "--cam-hz")
    seed_list = _parse_list(seeds, int, "--seeds")
    loss_list = _parse_list(loss_probs, float, "--loss-probs") if loss_probs is not None else None
    output_dir = _output_dir(out)

    trace = start_trace("sweep", metadata={"config": str(config), "cam_hz": hz_list, "seeds": seed_list})
    try:
        summaries = run_sweep(cfg, hz_list, seed_list, loss_probs=loss_list, trace=trace)
    except ConfigError as e:
        typer.echo(f"Error: invalid sweep\n{e}", err=True)
        raise typer.Exit(1)
    try:
        emit_summary(summaries, output_dir / "sweep_summary.csv")
    except OutputError as e:
        typer.echo(f"Error: {e}", err=True)
        raise typer.Exit(1)
    finish_trace(trace)

    typer.echo("\n=== Sweep Results ===")
    for s in summaries:
        errors = ", ".join(f"{f.rms_gap_error_m:.3f}" for f in s.followers)
        typer.echo(f"{s.cam_hz:>5g} Hz  loss {s.loss_prob:<5g} seed {s.seed:<3d} RMS gap error [{errors}] m")
    typer.echo(f"\nOutputs written to: {output_dir}")


if __name__ == "__main__":
    app()
