import pytest
import yaml
from pydantic import ValidationError

from scenario import ConfigError, ScenarioConfig, apply_overrides, load_config


def _write(tmp_path, data, name="scenario.yaml"):
    path = tmp_path / name
    path.write_text(yaml.safe_dump(data))
    return path


class TestLoadConfig:
    def test_default_scenario_file(self, default_config):
        assert default_config.cam_hz == 10.0
        assert [v.id for v in default_config.chain()] == [1, 2, 3]
        assert default_config.n_ticks == 6000
        assert default_config.tick_period_ns == 20_000_000

    def test_minimal_config_gets_defaults(self, tmp_path):
        cfg = load_config(_write(tmp_path, {"seed": 4}))

        assert cfg.seed == 4
        assert len(cfg.vehicles) == 3
        assert cfg.gap_setpoint_m == 8.0
        assert cfg.gains.longitudinal.kp == 0.8
        assert [s.target_speed for s in cfg.leader.profile] == [0.0, 5.0, 5.0, 5.0]

    def test_empty_file_is_default(self, tmp_path):
        path = tmp_path / "empty.yaml"
        path.write_text("")

        assert load_config(path) == ScenarioConfig()

    def test_two_leaders_rejected(self, tmp_path):
        data = {
            "vehicles": [
                {"id": 1, "role": "leader"},
                {"id": 2, "role": "leader", "x": -10.0},
            ]
        }
        with pytest.raises(ConfigError, match=r"vehicles: .*exactly one leader"):
            load_config(_write(tmp_path, data))

    def test_cam_rate_must_divide_tick(self, tmp_path):
        with pytest.raises(ConfigError, match=r"cam_hz: .*not a multiple"):
            load_config(_write(tmp_path, {"cam_hz": 3}))

    def test_nested_field_path_reported(self, tmp_path):
        with pytest.raises(ConfigError, match=r"channel\.loss_prob"):
            load_config(_write(tmp_path, {"channel": {"loss_prob": 1.5}}))

    def test_every_violation_listed(self, tmp_path):
        with pytest.raises(ConfigError) as exc:
            load_config(_write(tmp_path, {"seed": -1, "follower": {"lookahead_m": -2}}))

        message = str(exc.value)
        assert "seed:" in message
        assert "follower.lookahead_m:" in message

    def test_unknown_key_rejected(self, tmp_path):
        with pytest.raises(ConfigError, match="cam_rate"):
            load_config(_write(tmp_path, {"cam_rate": 10}))

    def test_missing_file(self, tmp_path):
        with pytest.raises(ConfigError, match="cannot read"):
            load_config(tmp_path / "missing.yaml")

    def test_bad_yaml(self, tmp_path):
        path = tmp_path / "bad.yaml"
        path.write_text("seed: [1, 2\n")

        with pytest.raises(ConfigError, match="invalid YAML"):
            load_config(path)

    def test_non_mapping_rejected(self, tmp_path):
        path = tmp_path / "list.yaml"
        path.write_text("- 1\n- 2\n")

        with pytest.raises(ConfigError, match="mapping"):
            load_config(path)


class TestPlatoonChain:
    def _vehicles(self, *specs):
        return {"vehicles": list(specs)}

    def test_follower_without_predecessor(self):
        with pytest.raises(ValidationError, match="needs a predecessor"):
            ScenarioConfig.model_validate(
                self._vehicles({"id": 1, "role": "leader"}, {"id": 2, "role": "follower"})
            )

    def test_unknown_predecessor(self):
        with pytest.raises(ValidationError, match="unknown vehicle 9"):
            ScenarioConfig.model_validate(
                self._vehicles({"id": 1, "role": "leader"}, {"id": 2, "role": "follower", "predecessor": 9})
            )

    def test_branching_rejected(self):
        with pytest.raises(ValidationError, match="both follow 1"):
            ScenarioConfig.model_validate(
                self._vehicles(
                    {"id": 1, "role": "leader"},
                    {"id": 2, "role": "follower", "predecessor": 1},
                    {"id": 3, "role": "follower", "predecessor": 1},
                )
            )

    def test_cycle_rejected(self):
        with pytest.raises(ValidationError, match="not a single chain"):
            ScenarioConfig.model_validate(
                self._vehicles(
                    {"id": 1, "role": "leader"},
                    {"id": 2, "role": "follower", "predecessor": 3},
                    {"id": 3, "role": "follower", "predecessor": 2},
                )
            )

    def test_chain_order_follows_predecessors(self):
        cfg = ScenarioConfig.model_validate(
            self._vehicles(
                {"id": 7, "role": "follower", "predecessor": 4, "x": -20.0},
                {"id": 4, "role": "follower", "predecessor": 1, "x": -10.0},
                {"id": 1, "role": "leader"},
            )
        )
        assert [v.id for v in cfg.chain()] == [1, 4, 7]
        assert [v.id for v in cfg.followers()] == [4, 7]


class TestOverrides:
    def test_top_level_and_nested(self):
        cfg = apply_overrides(ScenarioConfig(), seed=9, cam_hz=2.5, **{"channel.loss_prob": 0.2})

        assert (cfg.seed, cfg.cam_hz, cfg.channel.loss_prob) == (9, 2.5, 0.2)

    def test_none_values_skipped(self):
        base = ScenarioConfig()
        assert apply_overrides(base, seed=None, **{"channel.loss_prob": None}) == base

    def test_overrides_revalidated(self):
        with pytest.raises(ConfigError, match="cam_hz"):
            apply_overrides(ScenarioConfig(), cam_hz=3.0)

    def test_unknown_section(self):
        with pytest.raises(ConfigError, match="unknown config section"):
            apply_overrides(ScenarioConfig(), **{"radio.power": 1})

    def test_derived_component_configs(self):
        cfg = apply_overrides(
            ScenarioConfig(), seed=3, **{"channel.delay_jitter_s": 0.05, "follower.lost_track_timeout_s": 0.35}
        )

        assert cfg.channel_config().delay_jitter == 50_000_000
        assert cfg.channel_config().rng_seed == 3
        assert cfg.follower_config().lost_track_timeout == 350_000_000
