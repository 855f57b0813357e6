# commands/calibrate.py - 비접촉 샘플로 노이즈 σ / 접촉 임계값 추정
import json
import re
try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from pathlib import Path

from config.models import RunConfig
from core.tactile import calibrate_threshold
from utils.io import SampleFileError, read_sample_column

SENSOR_SECTION = "[env.sensor]"
_HEADER = re.compile(r"^\s*\[")
_KEY = re.compile(r"^\s*(sigma|f_thresh)\s*=")


def register(subparsers, common):
    parser = subparsers.add_parser("calibrate", parents=[common], help="estimate sensor noise and contact threshold")
    parser.add_argument("samples", help="text file with one no-contact raw reading per line")
    parser.add_argument("--patch-config", help="write sigma / f_thresh into this TOML config or JSON snapshot")
    parser.set_defaults(handler=run)


def patch_toml_text(text: str, sigma: float, thresh: float) -> str:
    """Replace (or add) sigma and f_thresh in the [env.sensor] section, keeping everything else."""
    values = {"sigma": f"sigma = {sigma!r}", "f_thresh": f"f_thresh = [{thresh!r}, {thresh!r}]"}
    lines = text.splitlines()
    try:
        start = next(i for i, line in enumerate(lines) if line.strip() == SENSOR_SECTION)
    except StopIteration:
        if lines and lines[-1].strip():
            lines.append("")
        lines += [SENSOR_SECTION, values["sigma"], values["f_thresh"]]
        return "\n".join(lines) + "\n"

    end = next((i for i in range(start + 1, len(lines)) if _HEADER.match(lines[i])), len(lines))
    seen = set()
    for i in range(start + 1, end):
        match = _KEY.match(lines[i])
        if match:
            key = match.group(1)
            lines[i] = values[key]
            seen.add(key)
    missing = [values[k] for k in ("sigma", "f_thresh") if k not in seen]
    lines[start + 1:start + 1] = missing
    return "\n".join(lines) + "\n"


def patch_config(path, sigma: float, thresh: float):
    """Patch a config in place; the result is validated before it is written."""
    path = Path(path)
    if not path.is_file():
        raise FileNotFoundError(f"config file not found: {path}")
    text = path.read_text(encoding="utf-8")
    if path.suffix.lower() == ".json":
        data = json.loads(text)
        sensor = data.setdefault("env", {}).setdefault("sensor", {})
        sensor["sigma"] = sigma
        sensor["f_thresh"] = [thresh, thresh]
        RunConfig.model_validate(data)
        new_text = json.dumps(data, indent=2) + "\n"
    else:
        new_text = patch_toml_text(text, sigma, thresh)
        RunConfig.model_validate(tomllib.loads(new_text))
    path.write_text(new_text, encoding="utf-8")


def run(args) -> int:
    samples = read_sample_column(args.samples)
    if len(samples) < 2:
        raise SampleFileError(args.samples, 0, f"need at least 2 samples, got {len(samples)}")
    sigma, thresh = calibrate_threshold(samples)
    print(f"samples: {len(samples)}")
    print(f"sigma_est: {sigma:.6g}")
    print(f"f_thresh: {thresh:.6g}")
    if args.patch_config:
        patch_config(args.patch_config, sigma, thresh)
        print(f"patched: {args.patch_config}")
    return 0
