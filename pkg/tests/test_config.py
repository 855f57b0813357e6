# tests/test_config.py - 실행 설정 로드 / 검증 테스트
import json
from pathlib import Path

import pytest
from pydantic import ValidationError

from config.models import (
    EnvKind,
    ForceMode,
    JointSpec,
    RunConfig,
    SimConfig,
    format_validation_error,
    load_run_config,
    snapshot_json,
    with_invocation,
    with_overrides,
)


def test_defaults():
    config = RunConfig()
    assert config.env.kind == EnvKind.GRIPPER_TACTILE
    assert config.env.f_goal == 1.0
    assert config.env.episode_length == 300
    assert config.env.sim.dt_control == 0.02
    assert config.env.sim.dt_inner == pytest.approx(0.004)
    assert config.env.sensor.f_thresh == (0.0231, 0.0231)
    assert config.td3.total_timesteps == 400_000
    assert config.seeds == [0, 1, 2, 3, 4]


def test_load_toml(tmp_path):
    path = tmp_path / "run.toml"
    path.write_text(
        "seeds = [1, 2]\n"
        "[env]\nf_goal = 2.0\nforce_mode = \"binary\"\n"
        "[env.sim.object_init]\nstiffness = 500.0\n"
        "[env.sensor]\nsigma = 0.01\n"
        "[td3]\nhidden_sizes = [32, 32]\n",
        encoding="utf-8",
    )
    config = load_run_config(path)
    assert config.seeds == [1, 2]
    assert config.env.f_goal == 2.0
    assert config.env.force_mode == ForceMode.BINARY
    assert config.env.sim.object_init.stiffness == 500.0
    assert config.env.sensor.sigma == 0.01
    assert config.td3.hidden_sizes == (32, 32)


def test_unknown_key_rejected(tmp_path):
    """오타 난 키는 기본값으로 넘어가지 않고 실패"""
    path = tmp_path / "run.toml"
    path.write_text("[td3]\nlearnng_rate = 0.1\n", encoding="utf-8")
    with pytest.raises(ValidationError) as exc_info:
        load_run_config(path)
    assert "td3.learnng_rate" in format_validation_error(exc_info.value)


def test_missing_file(tmp_path):
    with pytest.raises(FileNotFoundError):
        load_run_config(tmp_path / "nope.toml")


def test_snapshot_reloads_identically(tmp_path):
    config = with_overrides(RunConfig(), seed=7, noise_enabled=False)
    path = tmp_path / "config.snapshot.json"
    path.write_text(snapshot_json(config), encoding="utf-8")
    assert load_run_config(path) == config
    assert json.loads(path.read_text())["env"]["seed"] == 7


def test_snapshot_keeps_invocation(tmp_path):
    """run 섹션 (명령 + 인자) 도 스냅샷과 함께 왕복"""
    config = with_invocation(RunConfig(), "eval", policy="pi", trials=3, parallel=True)
    path = tmp_path / "config.snapshot.json"
    path.write_text(snapshot_json(config), encoding="utf-8")
    loaded = load_run_config(path)
    assert loaded == config
    assert loaded.run.trials == 3
    assert loaded.run.checkpoint is None
    assert json.loads(path.read_text())["run"]["command"] == "eval"


def test_overrides():
    config = with_overrides(RunConfig(), seed=3, total_timesteps=500, force_mode="binary", kind="tiago_tactile")
    assert config.env.seed == 3
    assert config.td3.total_timesteps == 500
    assert config.env.force_mode == ForceMode.BINARY
    assert config.env.kind == EnvKind.TIAGO_TACTILE


@pytest.mark.parametrize(
    "data",
    [
        {"env": {"f_goal": 0.0}},
        {"env": {"episode_length": 0}},
        {"env": {"sensor": {"f_thresh": [-0.1, 0.0]}}},
        {"env": {"sim": {"finger_open": 0.1}}},
        {"env": {"sim": {"finger_joint_indices": [1, 1]}}},
        {"td3": {"hidden_sizes": []}},
        {"td3": {"tau": 0.0}},
        {"td3": {"action_exponent": 0.5}},
        {"td3": {"reward_transform": "log"}},
    ],
)
def test_invalid_values(data):
    with pytest.raises(ValidationError):
        RunConfig.model_validate(data)


def test_joint_spec_range():
    with pytest.raises(ValidationError):
        JointSpec(name="j", q_min=1.0, q_max=0.0, v_max=1.0)


def test_finger_indices_checked_against_joint_table():
    specs = [{"name": "a", "q_min": 0.0, "q_max": 0.045, "v_max": 0.05}] * 2
    with pytest.raises(ValidationError):
        SimConfig.model_validate({"joint_specs": specs, "finger_joint_indices": [0, 2]})


def test_shipped_default_config_matches_code_defaults():
    path = Path(__file__).resolve().parents[1] / "configs" / "default.toml"
    assert load_run_config(path) == RunConfig()
