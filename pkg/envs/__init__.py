"""Gripper environments"""
from .base import GripperEnvBase, StepResult
from .gripper_tactile import GripperTactileEnv
from .registry import ENV_ALIASES, ENV_CLASSES, make_env, make_envs
from .tiago_pal_gripper import TiagoPalGripperEnv
from .tiago_tactile import TiagoTactileEnv
from .utils import StepRecord, build_observation, episode_return, reward, rollout

__all__ = [
    "GripperEnvBase",
    "StepResult",
    "GripperTactileEnv",
    "TiagoTactileEnv",
    "TiagoPalGripperEnv",
    "ENV_ALIASES",
    "ENV_CLASSES",
    "make_env",
    "make_envs",
    "StepRecord",
    "build_observation",
    "episode_return",
    "reward",
    "rollout",
]
