# tests/conftest.py - 공통 fixture
import os

import pytest

from config.models import EnvConfig, RunConfig, SensorModel
from database import db


def pytest_collection_modifyitems(config, items):
    if os.getenv("RUN_SLOW") == "1":
        return
    skip_slow = pytest.mark.skip(reason="slow learning run; set RUN_SLOW=1")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture(autouse=True)
def isolated_registry(tmp_path, monkeypatch):
    """run 레지스트리를 테스트별 임시 DB 로 격리"""
    monkeypatch.setattr(db, "DB_PATH", tmp_path / "runs.db")
    return tmp_path / "runs.db"


@pytest.fixture
def quiet_sensor():
    return SensorModel(noise_enabled=False)


@pytest.fixture
def quiet_env_config(quiet_sensor):
    """노이즈 없는 GripperTactile 기본 시나리오"""
    return EnvConfig(sensor=quiet_sensor)


@pytest.fixture
def small_run_config():
    """빠른 학습용 작은 설정"""
    return RunConfig.model_validate({
        "env": {"episode_length": 50},
        "td3": {
            "hidden_sizes": [16, 16],
            "batch_size": 32,
            "start_steps": 100,
            "total_timesteps": 400,
            "buffer_capacity": 10_000,
        },
    })
