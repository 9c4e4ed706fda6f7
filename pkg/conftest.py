from pathlib import Path

import pytest

from scenario import ScenarioConfig, apply_overrides, load_config

DEFAULT_SCENARIO = Path(__file__).parent / "config" / "default_scenario.yaml"


@pytest.fixture(scope="session")
def default_config() -> ScenarioConfig:
    return load_config(DEFAULT_SCENARIO)


@pytest.fixture
def short_config(default_config) -> ScenarioConfig:
    """Default platoon cut to 40 s: parked start, catch-up, 10 s past settling."""
    return apply_overrides(default_config, duration_s=40.0)
