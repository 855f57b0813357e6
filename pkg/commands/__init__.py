"""CLI subcommands"""
from . import calibrate, compare, evaluate, rollout, runs, train

SUBCOMMANDS = [train, evaluate, compare, rollout, calibrate, runs]

__all__ = ["SUBCOMMANDS"]
