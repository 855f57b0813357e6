# envs/tiago_pal_gripper.py - 전체 체인, 촉각 센서 없음
from config.models import EnvKind

from .tiago_tactile import TiagoTactileEnv


class TiagoPalGripperEnv(TiagoTactileEnv):
    """Same chain as TiagoTactileEnv without force deltas in the observation (20 values).

    Contact forces are still simulated so that the reward stays defined.
    """

    kind = EnvKind.TIAGO_PAL_GRIPPER
    tactile_obs = False
