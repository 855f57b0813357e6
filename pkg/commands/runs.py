# commands/runs.py - run 레지스트리 조회 / 삭제
import json

from database.db import count_runs, delete_run, get_run, init_database, list_runs

from .common import UsageError


def register(subparsers, common):
    parser = subparsers.add_parser("runs", help="list, show or delete registered runs")
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--show", type=int, metavar="ID", help="print one run with its metadata")
    group.add_argument("--delete", type=int, metavar="ID", help="remove a run from the registry (files stay)")
    parser.add_argument("--limit", type=int, default=20)
    parser.set_defaults(handler=run)


def _show(run_id: int):
    r = get_run(run_id)
    if r is None:
        raise UsageError(f"no run with id {run_id}")
    for key in ("id", "command", "status", "seed", "run_dir", "created_at", "updated_at"):
        print(f"{key}: {r[key]}")
    print("metadata: " + json.dumps(r["metadata"], indent=2, sort_keys=True))


def run(args) -> int:
    init_database()
    if args.show is not None:
        _show(args.show)
        return 0
    if args.delete is not None:
        if not delete_run(args.delete):
            raise UsageError(f"no run with id {args.delete}")
        print(f"deleted run {args.delete}")
        return 0

    runs = list_runs(limit=args.limit)
    print(f"{count_runs()} runs")
    for r in runs:
        seed = "-" if r["seed"] is None else r["seed"]
        print(f"{r['id']:>5}  {r['command']:<9} {r['status']:<10} seed={seed:<5} {r['created_at']}  {r['run_dir']}")
    return 0
