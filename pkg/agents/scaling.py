# agents/scaling.py - 학습기 입력 정규화 / 행동 성형
"""Learner-side scaling between the environment and the TD3 networks.

The environment keeps its physical units. The networks see joint positions
mapped onto [-1, 1] by the joint limits, velocities divided by v_max and
force deltas in units of f_goal, compressed with symlog. Stored rewards are
compressed the same way. Actions leave the actor in [-1, 1] and are shaped
by sign(a)·|a|^p before scaling to v_max, so small actor outputs give fine
velocity control near contact.
"""
from dataclasses import dataclass
from typing import Optional

import numpy as np

from config.models import TD3Config


def symlog(x):
    return np.sign(x) * np.log1p(np.abs(x))


def shape_action(action, exponent: float) -> np.ndarray:
    """sign(a)·|a|^p; p = 1 leaves the action linear."""
    action = np.asarray(action, dtype=np.float64)
    if exponent == 1.0:
        return action
    return np.sign(action) * np.abs(action) ** exponent


def unshape_action(velocity_fraction, exponent: float) -> np.ndarray:
    """Inverse of shape_action: the actor-space action giving v / v_max."""
    velocity_fraction = np.asarray(velocity_fraction, dtype=np.float64)
    if exponent == 1.0:
        return velocity_fraction
    return np.sign(velocity_fraction) * np.abs(velocity_fraction) ** (1.0 / exponent)


@dataclass(frozen=True)
class LearnerScaling:
    center: np.ndarray
    scale: np.ndarray
    force_start: Optional[int] = None
    f_goal: float = 1.0
    compress_reward: bool = False

    @classmethod
    def identity(cls, obs_dim: int) -> "LearnerScaling":
        return cls(center=np.zeros(obs_dim), scale=np.ones(obs_dim))

    @classmethod
    def from_env(cls, env, config: TD3Config) -> "LearnerScaling":
        """Scaling for env's observation layout [q, qdot, (Δf_right, Δf_left)]."""
        compress_reward = config.reward_transform == "symlog"
        f_goal = float(env.config.f_goal)
        if not config.obs_normalization:
            return cls(
                center=np.zeros(env.obs_dim),
                scale=np.ones(env.obs_dim),
                f_goal=f_goal,
                compress_reward=compress_reward,
            )
        limits = env.sim.limits
        n = env.n_joints
        center = np.zeros(env.obs_dim)
        scale = np.ones(env.obs_dim)
        center[:n] = 0.5 * (limits.q_min + limits.q_max)
        scale[:n] = 0.5 * (limits.q_max - limits.q_min)
        scale[n:2 * n] = limits.v_max
        return cls(
            center=center,
            scale=scale,
            force_start=2 * n if env.obs_dim > 2 * n else None,
            f_goal=f_goal,
            compress_reward=compress_reward,
        )

    def observation(self, obs) -> np.ndarray:
        """Works on a single observation or a batch (rows)."""
        obs = np.asarray(obs, dtype=np.float64)
        out = (obs - self.center) / self.scale
        if self.force_start is not None:
            out[..., self.force_start:] = symlog(obs[..., self.force_start:] / self.f_goal)
        return out

    def reward(self, r: float) -> float:
        if not self.compress_reward:
            return float(r)
        return float(symlog(r / self.f_goal))
