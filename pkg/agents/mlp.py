# agents/mlp.py - numpy MLP (수동 역전파) + Adam
"""Fully connected network with ReLU hidden layers and hand-written backprop.

Weights are stored as (fan_in, fan_out) so a batch x of shape (B, in) maps to
x @ W + b. Everything runs in float64.
"""
from typing import Optional, Sequence

import numpy as np

ACTIVATIONS = ("linear", "tanh")


class MLP:
    def __init__(self, sizes: Sequence[int], output_activation: str = "linear", rng: Optional[np.random.Generator] = None):
        sizes = tuple(int(s) for s in sizes)
        if len(sizes) < 2 or any(s < 1 for s in sizes):
            raise ValueError(f"invalid layer sizes {sizes}")
        if output_activation not in ACTIVATIONS:
            raise ValueError(f"unknown output activation {output_activation!r}")
        rng = rng if rng is not None else np.random.default_rng()

        self.sizes = sizes
        self.output_activation = output_activation
        self.weights: list[np.ndarray] = []
        self.biases: list[np.ndarray] = []
        for fan_in, fan_out in zip(sizes[:-1], sizes[1:]):
            bound = 1.0 / np.sqrt(fan_in)
            self.weights.append(rng.uniform(-bound, bound, size=(fan_in, fan_out)))
            self.biases.append(rng.uniform(-bound, bound, size=fan_out))

    @property
    def n_layers(self) -> int:
        return len(self.weights)

    @property
    def in_dim(self) -> int:
        return self.sizes[0]

    @property
    def out_dim(self) -> int:
        return self.sizes[-1]

    def parameters(self) -> list[np.ndarray]:
        """Weights then biases, in layer order. Arrays are live references."""
        return [*self.weights, *self.biases]

    def copy(self) -> "MLP":
        clone = MLP.__new__(MLP)
        clone.sizes = self.sizes
        clone.output_activation = self.output_activation
        clone.weights = [w.copy() for w in self.weights]
        clone.biases = [b.copy() for b in self.biases]
        return clone

    def load_parameters(self, weights: Sequence[np.ndarray], biases: Sequence[np.ndarray]):
        if len(weights) != self.n_layers or len(biases) != self.n_layers:
            raise ValueError("layer count mismatch")
        for i, (w, b) in enumerate(zip(weights, biases)):
            if w.shape != self.weights[i].shape or b.shape != self.biases[i].shape:
                raise ValueError(f"layer {i}: shape {w.shape}/{b.shape} does not match {self.weights[i].shape}/{self.biases[i].shape}")
            self.weights[i] = np.array(w, dtype=np.float64)
            self.biases[i] = np.array(b, dtype=np.float64)

    def forward(self, x) -> tuple[np.ndarray, tuple]:
        """Batched forward pass.

        Args:
            x: input of shape (B, in_dim)

        Returns:
            (output of shape (B, out_dim), cache for backward)
        """
        x = np.asarray(x, dtype=np.float64)
        if x.ndim != 2 or x.shape[1] != self.in_dim:
            raise ValueError(f"input shape {x.shape} does not match network input dim {self.in_dim}")

        inputs, pre = [], []
        a = x
        for i, (w, b) in enumerate(zip(self.weights, self.biases)):
            inputs.append(a)
            z = a @ w + b
            pre.append(z)
            if i < self.n_layers - 1:
                a = np.maximum(z, 0.0)
            elif self.output_activation == "tanh":
                a = np.tanh(z)
            else:
                a = z
        return a, (inputs, pre, a)

    def __call__(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=np.float64)
        if x.ndim == 1:
            return self.forward(x[None, :])[0][0]
        return self.forward(x)[0]

    def backward(self, cache: tuple, grad_out: np.ndarray) -> tuple[list[np.ndarray], list[np.ndarray], np.ndarray]:
        """Backprop dL/dy through the network.

        Returns:
            (dL/dW per layer, dL/db per layer, dL/dx)
        """
        inputs, pre, out = cache
        delta = np.asarray(grad_out, dtype=np.float64)
        if self.output_activation == "tanh":
            delta = delta * (1.0 - out ** 2)

        grads_w: list[np.ndarray] = [None] * self.n_layers
        grads_b: list[np.ndarray] = [None] * self.n_layers
        grad_in = delta
        for i in reversed(range(self.n_layers)):
            grads_w[i] = inputs[i].T @ delta
            grads_b[i] = delta.sum(axis=0)
            grad_in = delta @ self.weights[i].T
            if i > 0:
                delta = grad_in * (pre[i - 1] > 0.0)
        return grads_w, grads_b, grad_in


def soft_update(target: MLP, source: MLP, tau: float):
    """θ' ← τ·θ + (1 − τ)·θ', in place on target."""
    if target.sizes != source.sizes:
        raise ValueError(f"cannot track network {source.sizes} with target {target.sizes}")
    for i in range(target.n_layers):
        target.weights[i] = tau * source.weights[i] + (1.0 - tau) * target.weights[i]
        target.biases[i] = tau * source.biases[i] + (1.0 - tau) * target.biases[i]


class Adam:
    """Adam optimizer over one network's parameter list."""

    def __init__(self, net: MLP, lr: float = 1e-3, betas: tuple[float, float] = (0.9, 0.999), eps: float = 1e-8):
        self.net = net
        self.lr = lr
        self.beta1, self.beta2 = betas
        self.eps = eps
        self.t = 0
        self.m = [np.zeros_like(p) for p in net.parameters()]
        self.v = [np.zeros_like(p) for p in net.parameters()]

    def step(self, grads_w: list[np.ndarray], grads_b: list[np.ndarray]):
        self.t += 1
        grads = [*grads_w, *grads_b]
        params = self.net.parameters()
        bias1 = 1.0 - self.beta1 ** self.t
        bias2 = 1.0 - self.beta2 ** self.t
        for i, (p, g) in enumerate(zip(params, grads)):
            self.m[i] = self.beta1 * self.m[i] + (1.0 - self.beta1) * g
            self.v[i] = self.beta2 * self.v[i] + (1.0 - self.beta2) * g * g
            m_hat = self.m[i] / bias1
            v_hat = self.v[i] / bias2
            p -= self.lr * m_hat / (np.sqrt(v_hat) + self.eps)
