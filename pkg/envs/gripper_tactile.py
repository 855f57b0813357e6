# envs/gripper_tactile.py - 그리퍼 단독 + 촉각 센서 환경
import numpy as np

from config.models import EnvKind, JointSpec, SimConfig

from .base import GripperEnvBase, finger_specs


class GripperTactileEnv(GripperEnvBase):
    """Two finger joints only; observation is (q, qdot, Δf), 6 values."""

    kind = EnvKind.GRIPPER_TACTILE
    tactile_obs = True

    def default_joints(self, sim: SimConfig) -> tuple[list[JointSpec], tuple[int, int], np.ndarray]:
        return finger_specs(sim), (0, 1), np.array([sim.finger_open, sim.finger_open])
