# core/tactile.py - 촉각 센서 모델
"""Turns simulated contact forces into load-cell style readings.

raw    = scale * f_contact + N(0, sigma)   (noise drawn once per control step)
binary = 1 if raw > f_thresh else 0        (strict)
"""
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from config.models import SensorModel

# 비접촉 노이즈의 몇 σ 위를 접촉으로 볼지
THRESHOLD_SIGMAS = 3.0


@dataclass(frozen=True)
class ForceReading:
    # [right, left]
    f_contact: np.ndarray
    f_raw: np.ndarray
    f_binary: np.ndarray


def raw_force(f_contact, model: SensorModel, rng: Optional[np.random.Generator] = None) -> np.ndarray:
    f_contact = np.asarray(f_contact, dtype=np.float64)
    raw = f_contact * model.scale
    if model.noise_enabled and model.sigma > 0:
        if rng is None:
            raise ValueError("an rng is required when sensor noise is enabled")
        raw = raw + rng.normal(0.0, model.sigma, size=raw.shape)
    return raw


def binary_force(f_raw, model: SensorModel) -> np.ndarray:
    f_raw = np.asarray(f_raw, dtype=np.float64)
    return (f_raw > np.asarray(model.f_thresh, dtype=np.float64)).astype(np.int64)


def calibrate_threshold(samples: Sequence[float], k: float = THRESHOLD_SIGMAS) -> tuple[float, float]:
    """Estimate the no-contact noise level and a contact threshold.

    Args:
        samples: raw readings taken without contact
        k: threshold multiplier

    Returns:
        (sigma_est, f_thresh) with sigma_est the sample std (n-1) and f_thresh = k * sigma_est

    Raises:
        ValueError: fewer than two samples
    """
    values = np.asarray(samples, dtype=np.float64).ravel()
    if values.size < 2:
        raise ValueError(f"need at least 2 samples to calibrate, got {values.size}")
    sigma_est = float(np.std(values, ddof=1))
    return sigma_est, k * sigma_est


class TactileSensor:
    """Pair of fingertip load cells sharing one seeded noise source."""

    def __init__(self, model: SensorModel, rng: Optional[np.random.Generator] = None):
        self.model = model
        self.rng = rng if rng is not None else np.random.default_rng()

    def reseed(self, rng: np.random.Generator):
        self.rng = rng

    def read(self, f_contact) -> ForceReading:
        f_contact = np.asarray(f_contact, dtype=np.float64)
        f_raw = raw_force(f_contact, self.model, self.rng)
        return ForceReading(
            f_contact=f_contact.copy(),
            f_raw=f_raw,
            f_binary=binary_force(f_raw, self.model),
        )
