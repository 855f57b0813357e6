# main.py - 촉각 그리퍼 시뮬레이션 / 학습 툴킷 CLI
import argparse
import json
import logging
import sys
try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from pydantic import ValidationError

from agents.checkpoint import CheckpointError
from commands import SUBCOMMANDS
from commands.common import UsageError, common_parser
from config.models import format_validation_error
from config.settings import LOG_LEVEL
from utils.io import SampleFileError

logger = logging.getLogger("main")

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_RUNTIME = 2


class CliParser(argparse.ArgumentParser):
    """argparse 오류를 exit code 1 로 통일"""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = CliParser(prog="tactile-gripper", description="Tactile gripper simulation, PI baseline and TD3 training")
    subparsers = parser.add_subparsers(dest="command", required=True)
    common = common_parser()
    for module in SUBCOMMANDS:
        module.register(subparsers, common)
    return parser


def setup_logging(level: str = LOG_LEVEL):
    logging.basicConfig(
        level=getattr(logging, str(level).upper(), logging.INFO),
        format="%(asctime)s %(levelname)s %(name)s %(message)s",
        stream=sys.stderr,
    )


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK

    setup_logging()
    try:
        return args.handler(args)
    except ValidationError as e:
        print(format_validation_error(e), file=sys.stderr)
        return EXIT_USAGE
    except tomllib.TOMLDecodeError as e:
        print(f"invalid TOML config: {e}", file=sys.stderr)
        return EXIT_USAGE
    except json.JSONDecodeError as e:
        print(f"invalid JSON config: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (FileNotFoundError, SampleFileError, UsageError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except CheckpointError as e:
        print(f"checkpoint error: {e}", file=sys.stderr)
        return EXIT_RUNTIME
    except Exception as e:
        logger.exception(f"[CLI] {args.command} failed")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
