# config/models.py - 실행 설정 모델 (pydantic)
"""Run configuration models.

Every section of a run config file maps to one model below. All models reject
unknown keys so that a typo in a hyperparameter fails loudly instead of
silently falling back to a default.
"""
import json
try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from enum import Enum
from pathlib import Path
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from config.settings import OUTPUT_ROOT


class StrictModel(BaseModel):
    model_config = ConfigDict(extra="forbid")


class EnvKind(str, Enum):
    GRIPPER_TACTILE = "gripper_tactile"
    TIAGO_TACTILE = "tiago_tactile"
    TIAGO_PAL_GRIPPER = "tiago_pal_gripper"


class ForceMode(str, Enum):
    RAW = "raw"
    BINARY = "binary"


class JointSpec(StrictModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    name: str
    q_min: float
    q_max: float
    v_max: float = Field(gt=0)

    @model_validator(mode="after")
    def _check_range(self):
        if not self.q_min < self.q_max:
            raise ValueError(f"joint {self.name}: q_min ({self.q_min}) must be below q_max ({self.q_max})")
        return self


class ObjectParams(StrictModel):
    """Template of the grasped object (compliance lives here)."""
    half_width: float = Field(0.025, gt=0)
    mass: float = Field(0.1, gt=0)
    stiffness: float = Field(1000.0, gt=0)
    damping: float = Field(10.0, ge=0)


class SimConfig(StrictModel):
    dt_control: float = Field(0.02, gt=0)
    n_substeps: int = Field(5, ge=1)
    # 비어 있으면 환경 종류별 기본 관절 테이블을 사용
    joint_specs: list[JointSpec] = Field(default_factory=list)
    finger_joint_indices: Optional[tuple[int, int]] = None
    object_init: ObjectParams = Field(default_factory=ObjectParams)
    object_offset_range: float = Field(0.005, ge=0)
    ambient_damping: float = Field(5.0, ge=0)
    finger_open: float = Field(0.045, gt=0)
    finger_q_min: float = 0.0
    finger_q_max: float = 0.045
    finger_v_max: float = Field(0.05, gt=0)

    @model_validator(mode="after")
    def _check_fingers(self):
        if not self.finger_q_min < self.finger_q_max:
            raise ValueError("finger_q_min must be below finger_q_max")
        if not self.finger_q_min <= self.finger_open <= self.finger_q_max:
            raise ValueError("finger_open must lie within the finger joint range")
        if self.finger_joint_indices is not None:
            right, left = self.finger_joint_indices
            if right == left:
                raise ValueError("finger_joint_indices must be distinct")
            if self.joint_specs:
                n = len(self.joint_specs)
                if not (0 <= right < n and 0 <= left < n):
                    raise ValueError(f"finger_joint_indices {self.finger_joint_indices} out of range for {n} joints")
        return self

    @property
    def dt_inner(self) -> float:
        return self.dt_control / self.n_substeps


class SensorModel(StrictModel):
    scale: float = Field(100.0, gt=0)
    sigma: float = Field(0.0077, ge=0)
    f_thresh: tuple[float, float] = (0.0231, 0.0231)
    noise_enabled: bool = True

    @field_validator("f_thresh")
    @classmethod
    def _check_thresh(cls, value):
        if any(t < 0 for t in value):
            raise ValueError("f_thresh entries must be >= 0")
        return value


class EnvConfig(StrictModel):
    kind: EnvKind = EnvKind.GRIPPER_TACTILE
    f_goal: float = Field(1.0, gt=0)
    episode_length: int = Field(300, ge=1)
    force_mode: ForceMode = ForceMode.RAW
    # 진단용: raw 모드에서 노이즈 없는 힘으로 보상 계산
    reward_noise_free: bool = False
    # None 이면 매 reset 마다 ±object_offset_range 에서 샘플링
    object_offset: Optional[float] = 0.0
    seed: int = 0
    sim: SimConfig = Field(default_factory=SimConfig)
    sensor: SensorModel = Field(default_factory=SensorModel)


class PIGains(StrictModel):
    kp: float = Field(2.5e-4, ge=0)
    ki: float = Field(5e-5, ge=0)
    integral_limit: float = Field(0.05, gt=0)
    v_close: float = Field(0.02, gt=0)


class TD3Config(StrictModel):
    gamma: float = Field(0.99, ge=0, le=1)
    tau: float = Field(0.005, gt=0, le=1)
    policy_delay: int = Field(2, ge=1)
    target_noise_std: float = Field(0.2, ge=0)
    target_noise_clip: float = Field(0.5, ge=0)
    exploration_noise_std: float = Field(0.1, ge=0)
    batch_size: int = Field(100, ge=1)
    buffer_capacity: int = Field(1_000_000, ge=1)
    learning_rate: float = Field(1e-3, gt=0)
    start_steps: int = Field(1000, ge=0)
    total_timesteps: int = Field(400_000, ge=1)
    eval_window: int = Field(20, ge=1)
    hidden_sizes: tuple[int, ...] = (64, 64)
    parallel_envs: int = Field(1, ge=1)
    # 학습기 쪽 정규화 (환경 단위는 그대로)
    obs_normalization: bool = True
    reward_transform: Literal["none", "symlog"] = "symlog"
    action_exponent: float = Field(3.0, ge=1)

    @field_validator("hidden_sizes")
    @classmethod
    def _check_hidden(cls, value):
        if not value or any(h < 1 for h in value):
            raise ValueError("hidden_sizes needs at least one positive layer width")
        return value


class RunInvocation(StrictModel):
    """Command-line parameters of the run that wrote a snapshot.

    Fields that do not apply to the command stay None.
    """

    command: str
    policy: Optional[str] = None
    checkpoint: Optional[str] = None
    trials: Optional[int] = None
    include_random: Optional[bool] = None
    parallel: Optional[bool] = None
    all_seeds: Optional[bool] = None


class RunConfig(StrictModel):
    output_dir: str = Field(default_factory=lambda: OUTPUT_ROOT)
    seeds: list[int] = Field(default_factory=lambda: [0, 1, 2, 3, 4])
    env: EnvConfig = Field(default_factory=EnvConfig)
    pi: PIGains = Field(default_factory=PIGains)
    td3: TD3Config = Field(default_factory=TD3Config)
    run: Optional[RunInvocation] = None


def load_run_config(path: str | Path) -> RunConfig:
    """Load a TOML run config or a JSON snapshot.

    Raises:
        FileNotFoundError: path does not exist
        tomllib.TOMLDecodeError / json.JSONDecodeError: unparsable document
        pydantic.ValidationError: unknown keys or invalid values
    """
    path = Path(path)
    if not path.is_file():
        raise FileNotFoundError(f"config file not found: {path}")
    text = path.read_text(encoding="utf-8")
    if path.suffix.lower() == ".json":
        data = json.loads(text)
    else:
        data = tomllib.loads(text)
    return RunConfig.model_validate(data)


def with_overrides(
    config: RunConfig,
    *,
    seed: int | None = None,
    total_timesteps: int | None = None,
    noise_enabled: bool | None = None,
    force_mode: str | None = None,
    kind: str | None = None,
) -> RunConfig:
    """Apply CLI overrides and re-validate the whole document."""
    data = config.model_dump(mode="json")
    if seed is not None:
        data["env"]["seed"] = seed
    if total_timesteps is not None:
        data["td3"]["total_timesteps"] = total_timesteps
    if noise_enabled is not None:
        data["env"]["sensor"]["noise_enabled"] = noise_enabled
    if force_mode is not None:
        data["env"]["force_mode"] = force_mode
    if kind is not None:
        data["env"]["kind"] = kind
    return RunConfig.model_validate(data)


def with_invocation(config: RunConfig, command: str, **params) -> RunConfig:
    """Record the invoking command and its parameters in the config."""
    return config.model_copy(update={"run": RunInvocation(command=command, **params)})


def snapshot_json(config: RunConfig) -> str:
    """Effective-config snapshot with every default materialised."""
    return config.model_dump_json(indent=2) + "\n"


def format_validation_error(err: ValidationError) -> str:
    lines = []
    for item in err.errors():
        location = ".".join(str(part) for part in item["loc"]) or "<root>"
        lines.append(f"  {location}: {item['msg']}")
    return "invalid config:\n" + "\n".join(lines)
