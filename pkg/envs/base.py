# envs/base.py - 그리퍼 환경 공통 베이스
"""Shared environment: joint table, simulator, tactile sensors, reset/step and
the force-matching reward. Concrete kinds only choose their joint table and
whether the force deltas are part of the observation.
"""
import logging
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from config.models import EnvConfig, EnvKind, ForceMode, JointSpec, SimConfig
from core.simcore import ChainState, GripperSim, ObjectState
from core.tactile import ForceReading, TactileSensor

from .utils import build_observation, reward

logger = logging.getLogger(__name__)


@dataclass
class StepResult:
    obs: np.ndarray
    reward: float
    done: bool
    info: dict = field(default_factory=dict)


def finger_specs(sim: SimConfig) -> list[JointSpec]:
    return [
        JointSpec(name="gripper_right_finger_joint", q_min=sim.finger_q_min, q_max=sim.finger_q_max, v_max=sim.finger_v_max),
        JointSpec(name="gripper_left_finger_joint", q_min=sim.finger_q_min, q_max=sim.finger_q_max, v_max=sim.finger_v_max),
    ]


class GripperEnvBase:
    kind: EnvKind
    tactile_obs: bool = True

    def __init__(self, config: EnvConfig):
        self.config = config
        specs, fingers, home = self._resolve_joints(config.sim)
        self.sim = GripperSim(config.sim, specs, fingers)
        self.home = home
        self.rng = np.random.default_rng(config.seed)
        self.sensor = TactileSensor(config.sensor, self.rng)
        self.reading: Optional[ForceReading] = None
        self.initial_object_x = 0.0
        self.steps = 0
        self.done = True

    # --- joint table -----------------------------------------------------

    def default_joints(self, sim: SimConfig) -> tuple[list[JointSpec], tuple[int, int], np.ndarray]:
        """(joint specs, (right, left) finger indices, pre-grasp positions)."""
        raise NotImplementedError

    def _resolve_joints(self, sim: SimConfig):
        if not sim.joint_specs:
            return self.default_joints(sim)
        # 설정 파일의 관절 테이블 사용: 손가락은 열린 자세, 나머지는 0 을 한계 내로 클립
        specs = list(sim.joint_specs)
        fingers = sim.finger_joint_indices if sim.finger_joint_indices is not None else (len(specs) - 2, len(specs) - 1)
        home = np.clip(
            np.zeros(len(specs)),
            [s.q_min for s in specs],
            [s.q_max for s in specs],
        )
        for idx in fingers:
            home[idx] = np.clip(sim.finger_open, specs[idx].q_min, specs[idx].q_max)
        return specs, fingers, home

    # --- spaces ------------------------------------------------------------

    @property
    def n_joints(self) -> int:
        return self.sim.n_joints

    @property
    def obs_dim(self) -> int:
        return 2 * self.n_joints + (2 if self.tactile_obs else 0)

    @property
    def action_dim(self) -> int:
        return self.n_joints

    @property
    def action_high(self) -> np.ndarray:
        return self.sim.limits.v_max.copy()

    @property
    def finger_joint_indices(self) -> tuple[int, int]:
        return self.sim.fingers

    # --- episode -------------------------------------------------------------

    def _initial_offset(self) -> float:
        if self.config.object_offset is not None:
            return float(self.config.object_offset)
        limit = self.config.sim.object_offset_range
        return float(self.rng.uniform(-limit, limit))

    def reset(self, seed: Optional[int] = None) -> np.ndarray:
        if seed is not None:
            self.rng = np.random.default_rng(seed)
            self.sensor.reseed(self.rng)
        chain = ChainState(q=self.home.copy(), qdot=np.zeros(self.n_joints), t=0.0)
        obj = ObjectState.from_params(self.config.sim.object_init, x=self._initial_offset())
        self.initial_object_x = obj.x
        contact = self.sim.reset(chain, obj)
        self.reading = self.sensor.read(contact.f_contact)
        self.steps = 0
        self.done = False
        return self.observe()

    def observed_forces(self) -> np.ndarray:
        """Per-finger force signal the agent sees (raw or binary)."""
        if self.config.force_mode == ForceMode.BINARY:
            return self.reading.f_binary.astype(np.float64)
        return self.reading.f_raw

    def observe(self) -> np.ndarray:
        chain = self.sim.chain
        delta = self.observed_forces() - self.config.f_goal if self.tactile_obs else None
        return build_observation(chain.q, chain.qdot, delta)

    def compute_reward(self, reading: ForceReading) -> float:
        if self.config.reward_noise_free and self.config.force_mode == ForceMode.RAW:
            forces = reading.f_contact * self.config.sensor.scale
        else:
            forces = self.observed_forces()
        return reward(float(forces[0]), float(forces[1]), self.config.f_goal)

    def step(self, action) -> StepResult:
        if self.done:
            raise RuntimeError("step() called on a finished episode; call reset() first")
        action = np.asarray(action, dtype=np.float64)
        if action.shape != (self.action_dim,):
            raise ValueError(f"action has shape {action.shape}, expected ({self.action_dim},)")

        contact = self.sim.step(action)
        self.reading = self.sensor.read(contact.f_contact)
        self.steps += 1
        self.done = self.steps >= self.config.episode_length

        r = self.compute_reward(self.reading)
        info = {
            "step": self.steps,
            "f_contact": self.reading.f_contact.tolist(),
            "f_raw": self.reading.f_raw.tolist(),
            "f_binary": self.reading.f_binary.tolist(),
            "object_x": self.sim.obj.x,
            "object_v": self.sim.obj.v,
        }
        return StepResult(obs=self.observe(), reward=r, done=self.done, info=info)
