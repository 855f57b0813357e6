# commands/evaluate.py - 단일 정책 평가 (eval)
from bench.report import checkpoint_factory, evaluate, pi_factory, random_factory
from utils.io import write_json

from config.models import with_invocation

from .common import UsageError, checkpoint_arg, finish_run, load_config, start_run

METHODS = {"checkpoint": "td3_policy", "pi": "pi_baseline", "random": "random"}


def register(subparsers, common):
    parser = subparsers.add_parser("eval", parents=[common], help="evaluate one policy over seeded trials")
    parser.add_argument("--policy", choices=sorted(METHODS), default="checkpoint")
    parser.add_argument("--checkpoint", help="checkpoint for --policy checkpoint")
    parser.add_argument("--trials", type=int, default=10)
    parser.add_argument("--parallel", action="store_true", help="run trials in worker threads")
    parser.set_defaults(handler=run)


def run(args) -> int:
    config = load_config(args)
    if args.trials < 1:
        raise UsageError("--trials must be >= 1")
    if args.policy == "checkpoint":
        if not args.checkpoint:
            raise UsageError("--policy checkpoint requires --checkpoint PATH")
        factory = checkpoint_factory(config, args.checkpoint)
    elif args.policy == "pi":
        factory = pi_factory(config)
    else:
        factory = random_factory()
    config = with_invocation(
        config,
        "eval",
        policy=args.policy,
        checkpoint=checkpoint_arg(args.checkpoint) if args.policy == "checkpoint" else None,
        trials=args.trials,
        parallel=args.parallel,
    )

    run_dir, run_id = start_run("eval", args, config)
    try:
        report = evaluate(config, METHODS[args.policy], factory, n_trials=args.trials, parallel=args.parallel)
        write_json(run_dir / "report.json", report.model_dump(mode="json"))
    except Exception:
        finish_run(run_id, "failed")
        raise

    finish_run(run_id, "completed", {"method": report.method, "mean": report.mean, "std": report.std})
    print(f"{report.method}: {report.summary}")
    return 0
