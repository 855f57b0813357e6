# agents/policies.py - 롤아웃/평가용 정책
import numpy as np

from config.models import RunConfig

from .checkpoint import load_checkpoint
from .pi_controller import PIPolicy
from .scaling import LearnerScaling
from .td3 import TD3Agent

POLICY_NAMES = ("pi", "checkpoint", "random", "zero")


class ZeroPolicy:
    def reset(self, env):
        self.dim = env.action_dim

    def __call__(self, obs) -> np.ndarray:
        return np.zeros(self.dim)


class RandomPolicy:
    """Uniform joint velocities within ±v_max, from its own seeded rng."""

    def __init__(self, seed: int):
        self.seed = seed
        self.rng = np.random.default_rng(seed)
        self.high = None

    def reset(self, env):
        self.high = env.action_high

    def __call__(self, obs) -> np.ndarray:
        return self.rng.uniform(-self.high, self.high)


class AgentPolicy:
    """Deterministic actor of a trained agent (no exploration noise)."""

    def __init__(self, agent: TD3Agent):
        self.agent = agent

    def __call__(self, obs) -> np.ndarray:
        return self.agent.act(obs, explore=False)


def load_agent_policy(path, env, config: RunConfig) -> AgentPolicy:
    scaling = LearnerScaling.from_env(env, config.td3)
    agent = load_checkpoint(path, env.obs_dim, env.action_dim, env.action_high, config.td3, scaling=scaling)
    return AgentPolicy(agent)


def make_policy(name: str, env, config: RunConfig, seed: int = 0, checkpoint=None):
    if name == "pi":
        return PIPolicy(config.pi)
    if name == "zero":
        return ZeroPolicy()
    if name == "random":
        return RandomPolicy(seed)
    if name == "checkpoint":
        if checkpoint is None:
            raise ValueError("--policy checkpoint requires --checkpoint PATH")
        return load_agent_policy(checkpoint, env, config)
    raise ValueError(f"unknown policy {name!r}, choose from {POLICY_NAMES}")
