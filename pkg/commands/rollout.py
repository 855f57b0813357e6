# commands/rollout.py - 단일 에피소드 궤적 기록
from agents.policies import POLICY_NAMES, make_policy
from envs.registry import make_env
from envs.utils import rollout
from utils.io import write_jsonl

from config.models import with_invocation

from .common import UsageError, checkpoint_arg, finish_run, load_config, start_run


def register(subparsers, common):
    parser = subparsers.add_parser("rollout", parents=[common], help="record one episode as a JSONL trace")
    parser.add_argument("--policy", choices=POLICY_NAMES, default="pi")
    parser.add_argument("--checkpoint", help="checkpoint for --policy checkpoint")
    parser.set_defaults(handler=run)


def run(args) -> int:
    config = load_config(args)
    if args.policy == "checkpoint" and not args.checkpoint:
        raise UsageError("--policy checkpoint requires --checkpoint PATH")
    env = make_env(config.env)
    if args.policy == "pi" and env.n_joints != 2:
        raise UsageError(f"--policy pi needs the two-finger gripper env, got {config.env.kind.value}")
    policy = make_policy(args.policy, env, config, seed=config.env.seed, checkpoint=args.checkpoint)
    config = with_invocation(
        config,
        "rollout",
        policy=args.policy,
        checkpoint=checkpoint_arg(args.checkpoint) if args.policy == "checkpoint" else None,
    )

    run_dir, run_id = start_run("rollout", args, config)
    try:
        records, total = rollout(env, policy, config.env.seed)
        write_jsonl(run_dir / "trace.jsonl", (rec.to_dict() for rec in records))
    except Exception:
        finish_run(run_id, "failed")
        raise

    finish_run(run_id, "completed", {"policy": args.policy, "episode_return": total})
    print(f"episode_return: {total:.4f}")
    print(f"trace: {run_dir / 'trace.jsonl'}")
    return 0
