# agents/replay_buffer.py - 링 버퍼 경험 저장소
from dataclasses import dataclass

import numpy as np

INITIAL_ROWS = 4096


@dataclass
class Batch:
    obs: np.ndarray
    actions: np.ndarray
    rewards: np.ndarray
    next_obs: np.ndarray
    dones: np.ndarray

    def __len__(self) -> int:
        return len(self.rewards)


class ReplayBuffer:
    """FIFO ring of transitions with uniform sampling.

    Storage grows by doubling up to capacity; once full, the oldest
    transition is overwritten first.
    """

    def __init__(self, capacity: int, obs_dim: int, action_dim: int):
        if capacity < 1:
            raise ValueError("capacity must be >= 1")
        self.capacity = int(capacity)
        self.obs_dim = obs_dim
        self.action_dim = action_dim
        self.ptr = 0
        self.size = 0
        rows = min(self.capacity, INITIAL_ROWS)
        self.obs = np.zeros((rows, obs_dim))
        self.actions = np.zeros((rows, action_dim))
        self.rewards = np.zeros(rows)
        self.next_obs = np.zeros((rows, obs_dim))
        self.dones = np.zeros(rows)

    def __len__(self) -> int:
        return self.size

    def _grow(self):
        rows = min(self.capacity, 2 * len(self.rewards))
        for name in ("obs", "actions", "rewards", "next_obs", "dones"):
            old = getattr(self, name)
            new = np.zeros((rows,) + old.shape[1:])
            new[: len(old)] = old
            setattr(self, name, new)

    def add(self, obs, action, reward: float, next_obs, done: float):
        if self.ptr >= len(self.rewards):
            self._grow()
        self.obs[self.ptr] = obs
        self.actions[self.ptr] = action
        self.rewards[self.ptr] = reward
        self.next_obs[self.ptr] = next_obs
        self.dones[self.ptr] = done
        self.ptr = (self.ptr + 1) % self.capacity
        self.size = min(self.size + 1, self.capacity)

    def sample(self, batch_size: int, rng: np.random.Generator) -> Batch:
        if self.size < batch_size:
            raise RuntimeError(f"buffer holds {self.size} transitions, cannot sample {batch_size}")
        idx = rng.integers(0, self.size, size=batch_size)
        return Batch(
            obs=self.obs[idx],
            actions=self.actions[idx],
            rewards=self.rewards[idx],
            next_obs=self.next_obs[idx],
            dones=self.dones[idx],
        )
