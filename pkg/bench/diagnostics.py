# bench/diagnostics.py - 파지 품질 지표
"""Per-episode grasp diagnostics computed from a rollout trace.

They separate a policy that holds the object from one that bounces it
between the fingers while still collecting a moderate return.
"""
from dataclasses import asdict, dataclass
from typing import Sequence

import numpy as np

from envs.utils import StepRecord


@dataclass
class GraspDiagnostics:
    # 두 손가락 모두 접촉한 스텝 비율
    contact_fraction: float
    # 손가락별 접촉 시작 횟수 [right, left]
    contact_onsets: tuple[int, int]
    object_travel: float
    final_force_error: float

    def to_dict(self) -> dict:
        data = asdict(self)
        data["contact_onsets"] = list(self.contact_onsets)
        return data


def grasp_diagnostics(records: Sequence[StepRecord], f_goal: float, initial_object_x: float = 0.0) -> GraspDiagnostics:
    if not records:
        raise ValueError("cannot compute diagnostics of an empty trace")

    in_contact = np.array([[f > 0.0 for f in rec.f_contact] for rec in records])
    both = in_contact.all(axis=1)
    onsets = []
    for finger in range(2):
        column = in_contact[:, finger].astype(int)
        onsets.append(int(column[0] + np.count_nonzero(np.diff(column) == 1)))

    xs = np.array([initial_object_x] + [rec.object_x for rec in records])
    final = np.asarray(records[-1].f_raw)
    return GraspDiagnostics(
        contact_fraction=float(both.mean()),
        contact_onsets=(onsets[0], onsets[1]),
        object_travel=float(np.abs(np.diff(xs)).sum()),
        final_force_error=float(np.abs(final - f_goal).mean()),
    )


def mean_diagnostics(items: Sequence[GraspDiagnostics]) -> dict[str, float]:
    if not items:
        return {}
    return {
        "contact_fraction": float(np.mean([d.contact_fraction for d in items])),
        "contact_onsets": float(np.mean([sum(d.contact_onsets) for d in items])),
        "object_travel": float(np.mean([d.object_travel for d in items])),
        "final_force_error": float(np.mean([d.final_force_error for d in items])),
    }
