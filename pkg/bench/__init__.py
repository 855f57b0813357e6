"""Experiment harness"""
from .curves import median_curve, median_learning_curve
from .diagnostics import GraspDiagnostics, grasp_diagnostics, mean_diagnostics
from .report import (
    ComparisonReport,
    TrialReport,
    TrialResult,
    compare,
    evaluate,
    format_mean_std,
    run_trial,
    run_trials,
    run_trials_async,
    summarize,
)

__all__ = [
    "median_curve",
    "median_learning_curve",
    "GraspDiagnostics",
    "grasp_diagnostics",
    "mean_diagnostics",
    "ComparisonReport",
    "TrialReport",
    "TrialResult",
    "compare",
    "evaluate",
    "format_mean_std",
    "run_trial",
    "run_trials",
    "run_trials_async",
    "summarize",
]
