# agents/pi_controller.py - 접촉 정지 + PI 힘 제어 베이스라인
"""Classical grasp controller.

Closing phase: both fingers close at v_close. A finger whose raw force rises
above its noise threshold stops and waits (contact latches) until the other
finger also touches the object. Then the controller switches to per-finger PI
regulation of the raw force towards f_goal and never switches back.
"""
import logging
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Optional

import numpy as np

from config.models import PIGains
from envs.utils import StepRecord, rollout

logger = logging.getLogger(__name__)

# 손가락 관절 속도가 음수일 때 닫힘
CLOSING_DIRECTION = -1.0


class Phase(str, Enum):
    CLOSING = "closing"
    FORCE_CONTROL = "force_control"


@dataclass(frozen=True)
class ControllerState:
    phase: Phase = Phase.CLOSING
    finger_contact: tuple[bool, bool] = (False, False)
    integral: np.ndarray = field(default_factory=lambda: np.zeros(2))


def _force_control(state: ControllerState, f_raw: np.ndarray, gains: PIGains, f_goal: float, dt: float):
    error = f_goal - f_raw
    integral = np.clip(state.integral + error * dt, -gains.integral_limit, gains.integral_limit)
    action = CLOSING_DIRECTION * (gains.kp * error + gains.ki * integral)
    return action, replace(state, integral=integral)


def controller_step(
    state: ControllerState,
    f_raw,
    f_thresh,
    gains: PIGains,
    f_goal: float,
    dt: float,
) -> tuple[np.ndarray, ControllerState]:
    """One control tick.

    Args:
        state: controller state from the previous tick
        f_raw: raw force of [right, left] finger
        f_thresh: contact threshold per finger
        gains: PI gains and closing speed
        f_goal: target raw force
        dt: control period (s)

    Returns:
        (finger velocity command [right, left], next state)

    Raises:
        ValueError: forces are not given for exactly two fingers
    """
    f_raw = np.asarray(f_raw, dtype=np.float64)
    f_thresh = np.asarray(f_thresh, dtype=np.float64)
    if f_raw.shape != (2,) or f_thresh.shape != (2,):
        raise ValueError(f"PI controller needs two fingers, got forces {f_raw.shape} thresholds {f_thresh.shape}")

    if state.phase == Phase.FORCE_CONTROL:
        return _force_control(state, f_raw, gains, f_goal, dt)

    contact = tuple(bool(latched or f > t) for latched, f, t in zip(state.finger_contact, f_raw, f_thresh))
    if all(contact):
        switched = ControllerState(phase=Phase.FORCE_CONTROL, finger_contact=(True, True), integral=np.zeros(2))
        return _force_control(switched, f_raw, gains, f_goal, dt)

    action = np.array([0.0 if c else CLOSING_DIRECTION * gains.v_close for c in contact])
    return action, ControllerState(phase=Phase.CLOSING, finger_contact=contact, integral=state.integral.copy())


class PIPolicy:
    """Wraps controller_step as an env policy; forces come from env.reading."""

    def __init__(self, gains: PIGains):
        self.gains = gains
        self.env = None
        self.state = ControllerState()
        self.phases: list[Phase] = []
        self.initial_object_x = 0.0

    def reset(self, env):
        if env.n_joints != 2:
            raise ValueError(f"PI baseline drives a two-finger gripper, env has {env.n_joints} joints")
        self.env = env
        self.state = ControllerState()
        self.phases = []
        self.initial_object_x = env.initial_object_x

    def __call__(self, obs) -> np.ndarray:
        if self.env is None:
            raise RuntimeError("PIPolicy used before reset(env)")
        env = self.env
        action, self.state = controller_step(
            self.state,
            env.reading.f_raw,
            env.config.sensor.f_thresh,
            self.gains,
            env.config.f_goal,
            env.config.sim.dt_control,
        )
        self.phases.append(self.state.phase)
        return action


@dataclass
class BaselineResult:
    trace: list[StepRecord]
    episode_return: float
    phases: list[Phase]
    initial_object_x: float
    # force control 로 전환된 첫 스텝 (None 이면 전환되지 않음)
    switch_step: Optional[int]

    @property
    def acquisition_displacement(self) -> float:
        """Largest object excursion from its start while the fingers were closing."""
        end = self.switch_step if self.switch_step is not None else len(self.trace)
        window = self.trace[: end + 1]
        if not window:
            return 0.0
        return max(abs(rec.object_x - self.initial_object_x) for rec in window)


def run_baseline(env, gains: PIGains, seed: Optional[int] = None) -> BaselineResult:
    """Run one PI-controlled episode on a two-finger env."""
    if env.n_joints != 2:
        raise ValueError(f"PI baseline drives a two-finger gripper, env has {env.n_joints} joints")
    policy = PIPolicy(gains)
    trace, total = rollout(env, policy, seed)
    switch = next((i for i, p in enumerate(policy.phases) if p == Phase.FORCE_CONTROL), None)
    logger.info(
        f"[PI] return={total:.3f} switch_step={switch} f_goal={env.config.f_goal}"
    )
    return BaselineResult(
        trace=trace,
        episode_return=total,
        phases=policy.phases,
        initial_object_x=policy.initial_object_x,
        switch_step=switch,
    )
