"""Core simulation modules"""
from .simcore import (
    ChainState,
    ContactResult,
    GripperSim,
    JointLimits,
    ObjectState,
    compute_contact,
    integrate_joints,
    sim_step,
    step_object,
)
from .tactile import ForceReading, TactileSensor, binary_force, calibrate_threshold, raw_force

__all__ = [
    "ChainState",
    "ContactResult",
    "GripperSim",
    "JointLimits",
    "ObjectState",
    "compute_contact",
    "integrate_joints",
    "sim_step",
    "step_object",
    "ForceReading",
    "TactileSensor",
    "binary_force",
    "calibrate_threshold",
    "raw_force",
]
