# commands/train.py - TD3 학습
from pathlib import Path

from agents.checkpoint import save_checkpoint
from agents.td3 import TrainResult, checkpoint_rows, curve_rows, default_checkpoint_path, train
from bench.curves import median_learning_curve
from config.models import RunConfig, with_invocation, with_overrides
from envs.registry import make_env, make_envs
from utils.io import write_csv

from .common import finish_run, load_config, start_run, write_snapshot


def register(subparsers, common):
    parser = subparsers.add_parser("train", parents=[common], help="train a TD3 force-control policy")
    parser.add_argument("--total-timesteps", type=int, help="override td3.total_timesteps")
    parser.add_argument("--all-seeds", action="store_true", help="train every seed in `seeds` and write the median curve")
    parser.set_defaults(handler=run)


def train_one(config: RunConfig, run_dir: Path) -> TrainResult:
    """Train one seed into run_dir: snapshot, curve.csv, checkpoints/best.ckpt, checkpoints.csv."""
    write_snapshot(run_dir, config)
    seed = config.env.seed
    env = make_env(config.env)
    extra = None
    if config.td3.parallel_envs > 1:
        extra = make_envs(config.env, config.td3.parallel_envs - 1, seed + 1)
    ckpt_path = default_checkpoint_path(run_dir)

    result = train(env, config.td3, seed, on_best=lambda agent: save_checkpoint(ckpt_path, agent), extra_envs=extra)
    write_csv(Path(run_dir) / "curve.csv", curve_rows(result), ["step", "rolling_mean_return", "best_so_far"])
    write_csv(Path(run_dir) / "checkpoints.csv", checkpoint_rows(result), ["step", "best_mean"])
    return result


def run(args) -> int:
    config = load_config(args, total_timesteps=args.total_timesteps)
    config = with_invocation(config, "train", all_seeds=args.all_seeds)
    run_dir, run_id = start_run("train", args, config)
    try:
        if args.all_seeds:
            results = []
            for seed in config.seeds:
                seed_config = with_overrides(config, seed=seed)
                results.append(train_one(seed_config, run_dir / f"seed_{seed}"))
            median = median_learning_curve([r.curve for r in results])
            write_csv(
                run_dir / "median_curve.csv",
                [{"step": step, "median_rolling_mean_return": value} for step, value in median],
                ["step", "median_rolling_mean_return"],
            )
            summary = {f"seed_{s}": r.final_rolling_mean for s, r in zip(config.seeds, results)}
        else:
            result = train_one(config, run_dir)
            summary = {"final_rolling_mean": result.final_rolling_mean, "episodes": len(result.episode_returns)}
    except Exception:
        finish_run(run_id, "failed")
        raise

    finish_run(run_id, "completed", summary)
    for key, value in summary.items():
        print(f"{key}: {value}")
    print(f"run directory: {run_dir}")
    return 0
