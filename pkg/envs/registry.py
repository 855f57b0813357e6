# envs/registry.py - 환경 생성
from config.models import EnvConfig, EnvKind

from .base import GripperEnvBase
from .gripper_tactile import GripperTactileEnv
from .tiago_pal_gripper import TiagoPalGripperEnv
from .tiago_tactile import TiagoTactileEnv

ENV_CLASSES: dict[EnvKind, type[GripperEnvBase]] = {
    EnvKind.GRIPPER_TACTILE: GripperTactileEnv,
    EnvKind.TIAGO_TACTILE: TiagoTactileEnv,
    EnvKind.TIAGO_PAL_GRIPPER: TiagoPalGripperEnv,
}

# CLI --env 별칭
ENV_ALIASES = {
    "gripper": EnvKind.GRIPPER_TACTILE,
    "tiago": EnvKind.TIAGO_TACTILE,
    "tiago-nosensor": EnvKind.TIAGO_PAL_GRIPPER,
}


def make_env(config: EnvConfig) -> GripperEnvBase:
    return ENV_CLASSES[EnvKind(config.kind)](config)


def make_envs(config: EnvConfig, n: int, master_seed: int) -> list[GripperEnvBase]:
    """n independent environments; environment i is seeded master_seed + i."""
    return [make_env(config.model_copy(update={"seed": master_seed + i})) for i in range(n)]
