# bench/curves.py - 시드별 학습 곡선 집계
from typing import Sequence

import numpy as np

from agents.td3 import CurvePoint


def median_curve(curves: Sequence[Sequence[float]]) -> np.ndarray:
    """Elementwise median across curves.

    Even counts take the lower of the two middle values, so every point of
    the result is a value some seed actually reached.

    Raises:
        ValueError: no curves, or curves of different lengths
    """
    if len(curves) == 0:
        raise ValueError("median_curve needs at least one curve")
    lengths = {len(c) for c in curves}
    if len(lengths) != 1:
        raise ValueError(f"curves have different lengths: {sorted(lengths)}")
    stacked = np.sort(np.asarray(curves, dtype=np.float64), axis=0)
    return stacked[(len(curves) - 1) // 2]


def median_learning_curve(curves: Sequence[Sequence[CurvePoint]]) -> list[tuple[int, float]]:
    """Median rolling-mean return at the steps every seed recorded."""
    if not curves:
        raise ValueError("median_learning_curve needs at least one curve")
    common = set(p.step for p in curves[0])
    for curve in curves[1:]:
        common &= set(p.step for p in curve)
    steps = sorted(common)
    values = [[p.rolling_mean for p in curve if p.step in common] for curve in curves]
    return list(zip(steps, median_curve(values).tolist()))
