# agents/__init__.py - 제어기 / 학습기 exports

from .checkpoint import CheckpointError, load_checkpoint, save_checkpoint
from .mlp import MLP, Adam, soft_update
from .pi_controller import BaselineResult, ControllerState, Phase, PIPolicy, controller_step, run_baseline
from .policies import AgentPolicy, RandomPolicy, ZeroPolicy, make_policy
from .replay_buffer import Batch, ReplayBuffer
from .td3 import CurvePoint, TD3Agent, TrainResult, train

__all__ = [
    'CheckpointError',
    'load_checkpoint',
    'save_checkpoint',
    'MLP',
    'Adam',
    'soft_update',
    'BaselineResult',
    'ControllerState',
    'Phase',
    'PIPolicy',
    'controller_step',
    'run_baseline',
    'AgentPolicy',
    'RandomPolicy',
    'ZeroPolicy',
    'make_policy',
    'Batch',
    'ReplayBuffer',
    'CurvePoint',
    'TD3Agent',
    'TrainResult',
    'train',
]
