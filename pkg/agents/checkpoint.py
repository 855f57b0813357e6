# agents/checkpoint.py - 네트워크 파라미터 바이너리 저장/로드
"""Flat binary checkpoint format.

    b"TD3W"                      magic
    uint32 version               (1)
    uint32 network count
    per network:
        uint32 layer count L
        uint32 dims[L + 1]
        per layer: weights (dims[i] x dims[i+1], row-major) then bias (dims[i+1])

All integers and floats are little-endian; floats are float64. Networks are
written in the order actor, critic1, critic2.
"""
import logging
import os
import struct
from pathlib import Path

import numpy as np

from config.models import TD3Config

from .mlp import MLP
from .td3 import TD3Agent

logger = logging.getLogger(__name__)

MAGIC = b"TD3W"
VERSION = 1
NETWORK_ORDER = ("actor", "critic1", "critic2")
_F64 = np.dtype("<f8")


class CheckpointError(RuntimeError):
    """Checkpoint could not be read or does not fit the expected networks."""


def encode_networks(nets: list[MLP]) -> bytes:
    chunks = [MAGIC, struct.pack("<II", VERSION, len(nets))]
    for net in nets:
        chunks.append(struct.pack("<I", net.n_layers))
        chunks.append(struct.pack(f"<{len(net.sizes)}I", *net.sizes))
        for w, b in zip(net.weights, net.biases):
            chunks.append(np.ascontiguousarray(w, dtype=_F64).tobytes())
            chunks.append(np.ascontiguousarray(b, dtype=_F64).tobytes())
    return b"".join(chunks)


class _Reader:
    def __init__(self, data: bytes, path):
        self.data = data
        self.offset = 0
        self.path = path

    def take(self, n: int) -> bytes:
        if self.offset + n > len(self.data):
            raise CheckpointError(f"{self.path}: truncated checkpoint (needed {n} bytes at offset {self.offset})")
        chunk = self.data[self.offset:self.offset + n]
        self.offset += n
        return chunk

    def uints(self, count: int) -> tuple[int, ...]:
        return struct.unpack(f"<{count}I", self.take(4 * count))

    def floats(self, count: int) -> np.ndarray:
        return np.frombuffer(self.take(8 * count), dtype=_F64).astype(np.float64)


def decode_networks(data: bytes, path="<bytes>") -> list[tuple[tuple[int, ...], list[np.ndarray], list[np.ndarray]]]:
    """Parse a checkpoint into (sizes, weights, biases) per network."""
    reader = _Reader(data, path)
    if reader.take(4) != MAGIC:
        raise CheckpointError(f"{path}: not a checkpoint (bad magic bytes)")
    version, count = reader.uints(2)
    if version != VERSION:
        raise CheckpointError(f"{path}: unsupported checkpoint version {version}")

    nets = []
    for _ in range(count):
        (n_layers,) = reader.uints(1)
        if n_layers < 1:
            raise CheckpointError(f"{path}: network with no layers")
        sizes = reader.uints(n_layers + 1)
        weights, biases = [], []
        for fan_in, fan_out in zip(sizes[:-1], sizes[1:]):
            weights.append(reader.floats(fan_in * fan_out).reshape(fan_in, fan_out))
            biases.append(reader.floats(fan_out))
        nets.append((tuple(sizes), weights, biases))
    if reader.offset != len(data):
        raise CheckpointError(f"{path}: {len(data) - reader.offset} trailing bytes after last network")
    return nets


def save_checkpoint(path, agent: TD3Agent) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    nets = agent.networks()
    payload = encode_networks([nets[name] for name in NETWORK_ORDER])
    tmp = path.with_suffix(path.suffix + ".tmp")
    tmp.write_bytes(payload)
    os.replace(tmp, path)
    logger.debug(f"[Checkpoint] saved {path} ({len(payload)} bytes)")
    return path


def load_checkpoint(
    path, obs_dim: int, action_dim: int, action_scale, config: TD3Config, rng=None, scaling=None
) -> TD3Agent:
    """Rebuild an agent from a checkpoint written by save_checkpoint.

    Scaling is not stored in the file; pass LearnerScaling.from_env for the
    environment the checkpoint was trained on.

    Raises:
        CheckpointError: missing/unreadable file, malformed content, or
            networks that do not match obs_dim/action_dim/hidden_sizes
    """
    path = Path(path)
    try:
        data = path.read_bytes()
    except OSError as e:
        raise CheckpointError(f"{path}: cannot read checkpoint ({e})") from e

    nets = decode_networks(data, path)
    if len(nets) != len(NETWORK_ORDER):
        raise CheckpointError(f"{path}: expected {len(NETWORK_ORDER)} networks, found {len(nets)}")

    agent = TD3Agent(
        obs_dim, action_dim, action_scale, config, rng if rng is not None else np.random.default_rng(0), scaling
    )
    targets = agent.networks()
    for name, (sizes, weights, biases) in zip(NETWORK_ORDER, nets):
        net = targets[name]
        if sizes != net.sizes:
            raise CheckpointError(f"{path}: {name} has layers {sizes}, expected {net.sizes}")
        net.load_parameters(weights, biases)
    agent.actor_target = agent.actor.copy()
    agent.critic1_target = agent.critic1.copy()
    agent.critic2_target = agent.critic2.copy()
    return agent
