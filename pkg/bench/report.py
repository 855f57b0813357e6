# bench/report.py - PI vs TD3 비교 실험 / 리포트
"""Seeded trial runner and the PI-vs-policy comparison.

Statistics: mean and sample standard deviation (n - 1) of per-trial episode
returns, reported as "mean ± std" with two decimals.
"""
import asyncio
import logging
from dataclasses import dataclass
from typing import Callable, Literal, Optional, Sequence

import numpy as np
from pydantic import BaseModel, Field

from agents.pi_controller import PIPolicy
from agents.policies import RandomPolicy, load_agent_policy
from config.models import EnvConfig, RunConfig
from envs.registry import make_env
from envs.utils import rollout

from .diagnostics import GraspDiagnostics, grasp_diagnostics, mean_diagnostics

logger = logging.getLogger(__name__)

REPORT_VERSION = "1"

Method = Literal["pi_baseline", "td3_policy", "random"]
PolicyFactory = Callable[[int, object], Callable]


def summarize(returns: Sequence[float]) -> tuple[float, float]:
    values = np.asarray(returns, dtype=np.float64)
    if values.size == 0:
        raise ValueError("no returns to summarize")
    std = float(np.std(values, ddof=1)) if values.size > 1 else 0.0
    return float(np.mean(values)), std


def format_mean_std(mean: float, std: float) -> str:
    return f"{mean:.2f} ± {std:.2f}"


class TrialReport(BaseModel):
    method: Method
    returns: list[float]
    mean: float
    std: float
    seeds: list[int]
    config: dict = Field(default_factory=dict)
    version: str = REPORT_VERSION
    diagnostics: dict[str, float] = Field(default_factory=dict)

    @classmethod
    def from_trials(cls, method: Method, trials: Sequence["TrialResult"], config: RunConfig) -> "TrialReport":
        returns = [t.episode_return for t in trials]
        mean, std = summarize(returns)
        return cls(
            method=method,
            returns=returns,
            mean=mean,
            std=std,
            seeds=[t.seed for t in trials],
            config=config.model_dump(mode="json"),
            diagnostics=mean_diagnostics([t.diagnostics for t in trials]),
        )

    @property
    def summary(self) -> str:
        return format_mean_std(self.mean, self.std)


class ComparisonReport(BaseModel):
    pi: TrialReport
    td3: TrialReport
    random: Optional[TrialReport] = None
    verdict: Literal["td3_policy", "pi_baseline", "tie"]
    summary: dict[str, str]
    f_goal: float
    n_trials: int


@dataclass
class TrialResult:
    seed: int
    episode_return: float
    diagnostics: GraspDiagnostics


def run_trial(env_config: EnvConfig, policy_factory: PolicyFactory, seed: int) -> TrialResult:
    """One seeded episode on a fresh environment.

    policy_factory(seed, env) builds the policy for this trial.
    """
    env = make_env(env_config.model_copy(update={"seed": seed}))
    policy = policy_factory(seed, env)
    records, total = rollout(env, policy, seed)
    diag = grasp_diagnostics(records, env_config.f_goal, env.initial_object_x)
    return TrialResult(seed=seed, episode_return=total, diagnostics=diag)


def run_trials(env_config: EnvConfig, policy_factory: PolicyFactory, seeds: Sequence[int]) -> list[TrialResult]:
    return [run_trial(env_config, policy_factory, seed) for seed in seeds]


async def run_trials_async(env_config: EnvConfig, policy_factory: PolicyFactory, seeds: Sequence[int]) -> list[TrialResult]:
    """Trials in worker threads; results come back in seed order."""
    tasks = [asyncio.to_thread(run_trial, env_config, policy_factory, seed) for seed in seeds]
    return list(await asyncio.gather(*tasks))


def _execute(env_config, factory, seeds, parallel: bool) -> list[TrialResult]:
    if parallel:
        return asyncio.run(run_trials_async(env_config, factory, seeds))
    return run_trials(env_config, factory, seeds)


def trial_seeds(config: RunConfig, n_trials: int) -> list[int]:
    return [config.env.seed + i for i in range(n_trials)]


def pi_factory(config: RunConfig) -> PolicyFactory:
    return lambda seed, env: PIPolicy(config.pi)


def random_factory() -> PolicyFactory:
    return lambda seed, env: RandomPolicy(seed)


def checkpoint_factory(config: RunConfig, checkpoint) -> PolicyFactory:
    """Load the checkpoint once (CheckpointError surfaces before any trial runs)."""
    layout_env = make_env(config.env)
    policy = load_agent_policy(checkpoint, layout_env, config)
    return lambda seed, env: policy


def evaluate(
    config: RunConfig,
    method: Method,
    factory: PolicyFactory,
    n_trials: int = 10,
    seeds: Optional[Sequence[int]] = None,
    parallel: bool = False,
) -> TrialReport:
    seeds = list(seeds) if seeds is not None else trial_seeds(config, n_trials)
    trials = _execute(config.env, factory, seeds, parallel)
    report = TrialReport.from_trials(method, trials, config)
    logger.info(f"[Bench] {method}: {report.summary} over {len(seeds)} trials (f_goal={config.env.f_goal})")
    return report


def compare(
    config: RunConfig,
    checkpoint,
    n_trials: int = 10,
    seeds: Optional[Sequence[int]] = None,
    include_random: bool = True,
    parallel: bool = False,
) -> ComparisonReport:
    """PI baseline vs trained policy (and optionally random actions) on the same seeds.

    Raises:
        CheckpointError: checkpoint cannot be loaded
    """
    seeds = list(seeds) if seeds is not None else trial_seeds(config, n_trials)
    td3_factory = checkpoint_factory(config, checkpoint)

    pi_report = evaluate(config, "pi_baseline", pi_factory(config), seeds=seeds, parallel=parallel)
    td3_report = evaluate(config, "td3_policy", td3_factory, seeds=seeds, parallel=parallel)
    random_report = None
    if include_random:
        random_report = evaluate(config, "random", random_factory(), seeds=seeds, parallel=parallel)

    if td3_report.mean > pi_report.mean:
        verdict = "td3_policy"
    elif td3_report.mean < pi_report.mean:
        verdict = "pi_baseline"
    else:
        verdict = "tie"

    summary = {"pi_baseline": pi_report.summary, "td3_policy": td3_report.summary}
    if random_report is not None:
        summary["random"] = random_report.summary
    logger.info(f"[Bench] verdict={verdict} pi={pi_report.summary} td3={td3_report.summary}")
    return ComparisonReport(
        pi=pi_report,
        td3=td3_report,
        random=random_report,
        verdict=verdict,
        summary=summary,
        f_goal=config.env.f_goal,
        n_trials=len(seeds),
    )


def returns_rows(report: ComparisonReport) -> list[dict]:
    """One row per trial: trial, seed and the return of each method."""
    reports = [report.pi, report.td3] + ([report.random] if report.random is not None else [])
    rows = []
    for i, seed in enumerate(report.pi.seeds):
        row = {"trial": i, "seed": seed}
        for r in reports:
            row[r.method] = r.returns[i]
        rows.append(row)
    return rows
