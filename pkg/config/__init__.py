# Config module
from .models import (
    EnvConfig,
    EnvKind,
    ForceMode,
    JointSpec,
    ObjectParams,
    PIGains,
    RunConfig,
    SensorModel,
    SimConfig,
    TD3Config,
    format_validation_error,
    load_run_config,
    snapshot_json,
    with_overrides,
)

__all__ = [
    "EnvConfig",
    "EnvKind",
    "ForceMode",
    "JointSpec",
    "ObjectParams",
    "PIGains",
    "RunConfig",
    "SensorModel",
    "SimConfig",
    "TD3Config",
    "format_validation_error",
    "load_run_config",
    "snapshot_json",
    "with_overrides",
]
