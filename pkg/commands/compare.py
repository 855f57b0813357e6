# commands/compare.py - PI 베이스라인 vs 학습 정책
from bench.report import compare, returns_rows
from utils.io import write_csv, write_json

from config.models import with_invocation

from .common import UsageError, checkpoint_arg, finish_run, load_config, start_run


def register(subparsers, common):
    parser = subparsers.add_parser("compare", parents=[common], help="PI baseline vs trained policy")
    parser.add_argument("--checkpoint", required=True, help="trained policy checkpoint")
    parser.add_argument("--trials", type=int, default=10)
    parser.add_argument("--no-random", action="store_true", help="skip the random-action reference")
    parser.add_argument("--parallel", action="store_true", help="run trials in worker threads")
    parser.set_defaults(handler=run)


def run(args) -> int:
    config = load_config(args)
    if args.trials < 1:
        raise UsageError("--trials must be >= 1")
    config = with_invocation(
        config,
        "compare",
        checkpoint=checkpoint_arg(args.checkpoint),
        trials=args.trials,
        include_random=not args.no_random,
        parallel=args.parallel,
    )

    run_dir, run_id = start_run("compare", args, config)
    try:
        report = compare(
            config,
            args.checkpoint,
            n_trials=args.trials,
            include_random=not args.no_random,
            parallel=args.parallel,
        )
        write_json(run_dir / "report.json", report.model_dump(mode="json"))
        rows = returns_rows(report)
        write_csv(run_dir / "returns.csv", rows, list(rows[0].keys()))
    except Exception:
        finish_run(run_id, "failed")
        raise

    finish_run(run_id, "completed", {"verdict": report.verdict, **report.summary})
    for method, text in report.summary.items():
        print(f"{method}: {text}")
    print(f"verdict: {report.verdict}")
    return 0
