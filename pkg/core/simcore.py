# core/simcore.py - 1축 컴플라이언트 접촉 시뮬레이션
"""Fixed-timestep simulation of two gripper fingers, passive arm joints and a
compliant object living on one lateral axis.

Geometry: a finger joint position q is the finger's distance from the gripper
centre. The right finger surface sits at +q_right, the left one at -q_left,
so closing a finger means a negative joint velocity. The object occupies
[x - half_width, x + half_width].
"""
import logging
from dataclasses import dataclass, field, replace
from typing import Optional, Sequence

import numpy as np

from config.models import JointSpec, ObjectParams, SimConfig

logger = logging.getLogger(__name__)

RIGHT = 0
LEFT = 1


@dataclass(frozen=True)
class JointLimits:
    q_min: np.ndarray
    q_max: np.ndarray
    v_max: np.ndarray

    @classmethod
    def from_specs(cls, specs: Sequence[JointSpec]) -> "JointLimits":
        if not specs:
            raise ValueError("at least one joint spec is required")
        return cls(
            q_min=np.array([s.q_min for s in specs], dtype=np.float64),
            q_max=np.array([s.q_max for s in specs], dtype=np.float64),
            v_max=np.array([s.v_max for s in specs], dtype=np.float64),
        )

    def __len__(self) -> int:
        return len(self.q_min)


@dataclass(frozen=True)
class ChainState:
    q: np.ndarray
    qdot: np.ndarray
    t: float = 0.0

    def __post_init__(self):
        if np.shape(self.q) != np.shape(self.qdot):
            raise ValueError(f"q and qdot lengths differ: {np.shape(self.q)} vs {np.shape(self.qdot)}")

    @property
    def n_joints(self) -> int:
        return len(self.q)


@dataclass(frozen=True)
class ObjectState:
    x: float
    v: float
    half_width: float
    mass: float
    stiffness: float
    damping: float

    def __post_init__(self):
        if self.half_width <= 0 or self.mass <= 0 or self.stiffness <= 0 or self.damping < 0:
            raise ValueError(f"invalid object parameters: {self}")

    @classmethod
    def from_params(cls, params: ObjectParams, x: float = 0.0, v: float = 0.0) -> "ObjectState":
        return cls(
            x=float(x),
            v=float(v),
            half_width=params.half_width,
            mass=params.mass,
            stiffness=params.stiffness,
            damping=params.damping,
        )


@dataclass(frozen=True)
class ContactResult:
    # [right, left]
    penetration: np.ndarray = field(default_factory=lambda: np.zeros(2))
    f_contact: np.ndarray = field(default_factory=lambda: np.zeros(2))


def integrate_joints(state: ChainState, v_des, dt: float, limits: JointLimits) -> ChainState:
    """Advance every joint by one step of commanded velocity.

    Velocities are clipped to ±v_max, positions to [q_min, q_max]. A joint whose
    position clamp engaged ends the step at rest.

    Raises:
        ValueError: v_des length does not match the chain
    """
    v_des = np.asarray(v_des, dtype=np.float64)
    if v_des.shape != state.q.shape or len(limits) != state.n_joints:
        raise ValueError(
            f"velocity command has shape {v_des.shape}, chain has {state.n_joints} joints"
        )

    qdot = np.clip(v_des, -limits.v_max, limits.v_max)
    q = state.q + qdot * dt
    clamped = (q < limits.q_min) | (q > limits.q_max)
    q = np.clip(q, limits.q_min, limits.q_max)
    qdot = np.where(clamped, 0.0, qdot)
    return ChainState(q=q, qdot=qdot, t=state.t + dt)


def _spring_damper(penetration: float, rate: float, stiffness: float, damping: float) -> float:
    if penetration <= 0.0:
        return 0.0
    return max(0.0, stiffness * penetration + damping * rate)


def compute_contact(chain: ChainState, obj: ObjectState, fingers: tuple[int, int]) -> ContactResult:
    """Per-finger penetration and spring-damper normal force.

    Args:
        chain: current joint state
        obj: object state
        fingers: (right, left) joint indices of the finger joints

    Returns:
        ContactResult ordered [right, left]
    """
    right, left = fingers
    q_r, q_l = float(chain.q[right]), float(chain.q[left])
    qd_r, qd_l = float(chain.qdot[right]), float(chain.qdot[left])

    pen_r = max(0.0, obj.x + obj.half_width - q_r)
    pen_l = max(0.0, obj.half_width - obj.x - q_l)
    # 침투 속도 (양수 = 더 깊어지는 방향)
    rate_r = obj.v - qd_r
    rate_l = -obj.v - qd_l

    f_r = _spring_damper(pen_r, rate_r, obj.stiffness, obj.damping)
    f_l = _spring_damper(pen_l, rate_l, obj.stiffness, obj.damping)
    return ContactResult(
        penetration=np.array([pen_r, pen_l]),
        f_contact=np.array([f_r, f_l]),
    )


def step_object(obj: ObjectState, contact: ContactResult, dt: float, ambient_damping: float = 0.0) -> ObjectState:
    """Semi-implicit Euler step of the object along the lateral axis.

    The right finger pushes towards -x, the left one towards +x. Ambient
    damping is integrated implicitly, so kinetic energy never grows without
    contact.
    """
    f_r, f_l = float(contact.f_contact[RIGHT]), float(contact.f_contact[LEFT])
    net_force = f_l - f_r
    v = (obj.v + net_force / obj.mass * dt) / (1.0 + ambient_damping * dt / obj.mass)
    x = obj.x + v * dt
    return replace(obj, x=x, v=v)


def sim_step(
    chain: ChainState,
    obj: ObjectState,
    v_des,
    config: SimConfig,
    limits: Optional[JointLimits] = None,
    fingers: Optional[tuple[int, int]] = None,
) -> tuple[ChainState, ObjectState, ContactResult]:
    """One control step: n_substeps × (integrate_joints → compute_contact → step_object).

    Returns the final states and the contact of the last substep.
    """
    if limits is None:
        limits = JointLimits.from_specs(config.joint_specs)
    if fingers is None:
        fingers = config.finger_joint_indices
    if fingers is None:
        raise ValueError("finger_joint_indices must be set")

    dt = config.dt_inner
    contact = ContactResult()
    for _ in range(config.n_substeps):
        chain = integrate_joints(chain, v_des, dt, limits)
        contact = compute_contact(chain, obj, fingers)
        obj = step_object(obj, contact, dt, config.ambient_damping)
    return chain, obj, contact


class GripperSim:
    """Owns one chain + object pair and steps it at the control rate."""

    def __init__(
        self,
        config: SimConfig,
        joint_specs: Optional[Sequence[JointSpec]] = None,
        finger_joint_indices: Optional[tuple[int, int]] = None,
    ):
        specs = list(joint_specs) if joint_specs is not None else list(config.joint_specs)
        fingers = finger_joint_indices if finger_joint_indices is not None else config.finger_joint_indices
        if fingers is None:
            raise ValueError("finger_joint_indices must be set")
        right, left = fingers
        if right == left or not (0 <= right < len(specs) and 0 <= left < len(specs)):
            raise ValueError(f"invalid finger_joint_indices {fingers} for {len(specs)} joints")

        self.config = config
        self.joint_specs = specs
        self.fingers = (int(right), int(left))
        self.limits = JointLimits.from_specs(specs)
        self.chain: Optional[ChainState] = None
        self.obj: Optional[ObjectState] = None
        self.last_contact = ContactResult()

    @property
    def n_joints(self) -> int:
        return len(self.limits)

    def reset(self, chain: ChainState, obj: ObjectState) -> ContactResult:
        if chain.n_joints != self.n_joints:
            raise ValueError(f"chain has {chain.n_joints} joints, simulator expects {self.n_joints}")
        self.chain = chain
        self.obj = obj
        self.last_contact = compute_contact(chain, obj, self.fingers)
        logger.debug(f"[Sim] reset: q={chain.q.tolist()} object_x={obj.x:.6f}")
        return self.last_contact

    def step(self, v_des) -> ContactResult:
        if self.chain is None or self.obj is None:
            raise RuntimeError("simulator stepped before reset")
        self.chain, self.obj, self.last_contact = sim_step(
            self.chain, self.obj, v_des, self.config, self.limits, self.fingers
        )
        return self.last_contact
