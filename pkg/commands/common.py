# commands/common.py - 서브커맨드 공통 (설정 로드, run 디렉토리, 레지스트리)
import argparse
import logging
import sqlite3
from pathlib import Path
from typing import Optional

from config.models import RunConfig, load_run_config, snapshot_json, with_overrides
from database.db import create_run, init_database, update_run_status
from envs.registry import ENV_ALIASES
from utils.io import make_run_dir

logger = logging.getLogger(__name__)

SNAPSHOT_NAME = "config.snapshot.json"


class UsageError(Exception):
    """Invalid combination of command-line arguments (exit code 1)."""


def common_parser() -> argparse.ArgumentParser:
    """Flags shared by every subcommand."""
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument("--config", help="run config (TOML, or a JSON config snapshot)")
    parser.add_argument("--seed", type=int, help="environment / run seed")
    parser.add_argument("--out", help="output directory (default: fresh timestamped directory)")
    parser.add_argument("--no-noise", action="store_true", help="disable tactile sensor noise")
    parser.add_argument("--force-mode", choices=["raw", "binary"])
    parser.add_argument("--env", choices=sorted(ENV_ALIASES), help="environment kind")
    return parser


def load_config(args, **extra) -> RunConfig:
    config = load_run_config(args.config) if args.config else RunConfig()
    return with_overrides(
        config,
        seed=args.seed,
        noise_enabled=False if args.no_noise else None,
        force_mode=args.force_mode,
        kind=ENV_ALIASES[args.env].value if args.env else None,
        **extra,
    )


def write_snapshot(run_dir: Path, config: RunConfig) -> Path:
    path = Path(run_dir) / SNAPSHOT_NAME
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(snapshot_json(config), encoding="utf-8")
    return path


def checkpoint_arg(path: Optional[str]) -> Optional[str]:
    return str(Path(path).resolve()) if path else None


def start_run(command: str, args, config: RunConfig) -> tuple[Path, Optional[int]]:
    """Create the run directory, write the snapshot and register the run.

    config.run, when set by with_invocation, is copied into the registry
    metadata next to f_goal.
    """
    run_dir = make_run_dir(config.output_dir, command, args.out)
    write_snapshot(run_dir, config)
    metadata = {"f_goal": config.env.f_goal}
    if config.run is not None:
        metadata.update(config.run.model_dump(exclude={"command"}, exclude_none=True))
    run_id = None
    try:
        init_database()
        run_id = create_run(command, str(run_dir), config.env.seed, metadata=metadata)
    except sqlite3.Error as e:
        logger.warning(f"[DB] run registry unavailable: {e}")
    logger.info(f"[CLI] {command} -> {run_dir} (f_goal={config.env.f_goal})")
    return run_dir, run_id


def finish_run(run_id: Optional[int], status: str, metadata: Optional[dict] = None):
    if run_id is None:
        return
    try:
        update_run_status(run_id, status, metadata)
    except sqlite3.Error as e:
        logger.warning(f"[DB] failed to update run {run_id}: {e}")
