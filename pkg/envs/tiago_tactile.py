# envs/tiago_tactile.py - 전체 체인(토르소 + 팔 7축 + 손가락 2축) + 촉각 센서 환경
import numpy as np

from config.models import EnvKind, JointSpec, SimConfig

from .base import GripperEnvBase, finger_specs

# (name, q_min, q_max, v_max)
TIAGO_BODY_JOINTS = [
    ("torso_lift_joint", 0.0, 0.35, 0.07),
    ("arm_1_joint", 0.07, 2.68, 1.95),
    ("arm_2_joint", -1.5, 1.02, 1.95),
    ("arm_3_joint", -3.46, 1.57, 2.35),
    ("arm_4_joint", -0.32, 2.29, 2.35),
    ("arm_5_joint", -2.07, 2.07, 1.95),
    ("arm_6_joint", -1.39, 1.39, 1.76),
    ("arm_7_joint", -2.07, 2.07, 1.76),
]

# 파지 직전 자세 (placeholder 값: 실제 로봇 자세가 아님)
PRE_GRASP_POSTURE = [0.15, 0.2, -1.34, -0.2, 1.94, -1.57, 1.37, 0.0]


class TiagoTactileEnv(GripperEnvBase):
    """Torso, seven arm joints and two fingers (N=10); observation has 22 values.

    Body joints are kinematic: they integrate and clamp but never touch the object.
    """

    kind = EnvKind.TIAGO_TACTILE
    tactile_obs = True

    def default_joints(self, sim: SimConfig) -> tuple[list[JointSpec], tuple[int, int], np.ndarray]:
        specs = [JointSpec(name=n, q_min=lo, q_max=hi, v_max=v) for n, lo, hi, v in TIAGO_BODY_JOINTS]
        specs += finger_specs(sim)
        home = np.array(PRE_GRASP_POSTURE + [sim.finger_open, sim.finger_open])
        return specs, (8, 9), home
