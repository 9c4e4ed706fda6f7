# scenario package - config loading, platoon runs, sweeps and CSV output
from .config import (
    ConfigError,
    ScenarioConfig,
    VehicleSpec,
    apply_overrides,
    format_validation_error,
    load_config,
    validate_config,
)
from .metrics import (
    SUMMARY_COLUMNS,
    FollowerSample,
    FollowerStats,
    MetricsRecord,
    OutputError,
    RunSummary,
    emit_metrics,
    emit_summary,
    follower_stats,
    metrics_header,
)
from .runner import Platoon, build_platoon, run_scenario, step_platoon, summarize
from .sweep import run_sweep

__all__ = [
    "ConfigError",
    "ScenarioConfig",
    "VehicleSpec",
    "apply_overrides",
    "format_validation_error",
    "load_config",
    "validate_config",
    "SUMMARY_COLUMNS",
    "FollowerSample",
    "FollowerStats",
    "MetricsRecord",
    "OutputError",
    "RunSummary",
    "emit_metrics",
    "emit_summary",
    "follower_stats",
    "metrics_header",
    "Platoon",
    "build_platoon",
    "run_scenario",
    "step_platoon",
    "summarize",
    "run_sweep",
]
