# envs/utils.py - 보상 / 관측 / 에피소드 헬퍼
from dataclasses import asdict, dataclass
from typing import Callable, Optional

import numpy as np

Policy = Callable[[np.ndarray], np.ndarray]


def reward(f_right: float, f_left: float, f_goal: float) -> float:
    """Force-matching reward: -(|f_right - f_goal| + |f_left - f_goal|)."""
    return -(abs(f_right - f_goal) + abs(f_left - f_goal))


def build_observation(q, qdot, force_delta=None) -> np.ndarray:
    """[q_1..q_N, qdot_1..qdot_N] with (Δf_right, Δf_left) appended for tactile envs."""
    parts = [np.asarray(q, dtype=np.float64), np.asarray(qdot, dtype=np.float64)]
    if force_delta is not None:
        parts.append(np.asarray(force_delta, dtype=np.float64))
    return np.concatenate(parts)


@dataclass
class StepRecord:
    t: float
    q: list[float]
    qdot: list[float]
    f_contact: list[float]
    f_raw: list[float]
    action: list[float]
    reward: float
    object_x: float

    def to_dict(self) -> dict:
        return asdict(self)


def _policy_reset(policy, env):
    reset = getattr(policy, "reset", None)
    if callable(reset):
        reset(env)


def rollout(env, policy: Policy, seed: Optional[int] = None) -> tuple[list[StepRecord], float]:
    """Run one full episode from reset and record every step.

    A policy is any callable obs -> action. Stateful policies may expose
    reset(env), which is called right after the environment reset.
    """
    obs = env.reset(seed)
    _policy_reset(policy, env)
    records: list[StepRecord] = []
    total = 0.0
    done = False
    while not done:
        action = np.asarray(policy(obs), dtype=np.float64)
        result = env.step(action)
        total += result.reward
        chain = env.sim.chain
        records.append(
            StepRecord(
                t=chain.t,
                q=chain.q.tolist(),
                qdot=chain.qdot.tolist(),
                f_contact=result.info["f_contact"],
                f_raw=result.info["f_raw"],
                action=action.tolist(),
                reward=result.reward,
                object_x=result.info["object_x"],
            )
        )
        obs, done = result.obs, result.done
    return records, total


def episode_return(env, policy: Policy, seed: Optional[int] = None) -> float:
    obs = env.reset(seed)
    _policy_reset(policy, env)
    total = 0.0
    done = False
    while not done:
        result = env.step(policy(obs))
        total += result.reward
        obs, done = result.obs, result.done
    return total
