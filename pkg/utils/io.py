"""Run directories and artifact readers/writers"""
import csv
import json
import math
from datetime import datetime
from pathlib import Path
from typing import Iterable, Optional, Sequence

import numpy as np


class SampleFileError(ValueError):
    """Malformed calibration sample file; `line` is 1-based (0 for whole-file errors)."""

    def __init__(self, path, line: int, message: str):
        self.path = Path(path)
        self.line = line
        where = f"{path}:{line}" if line else str(path)
        super().__init__(f"{where}: {message}")


def make_run_dir(root, command: str, out: Optional[str] = None) -> Path:
    """--out 이 있으면 그대로 사용, 없으면 root 아래 새 타임스탬프 디렉토리"""
    if out:
        path = Path(out)
        path.mkdir(parents=True, exist_ok=True)
        return path

    root = Path(root)
    stamp = datetime.now().strftime("%Y%m%d-%H%M%S")
    base = root / f"{command}-{stamp}"
    path = base
    suffix = 1
    while path.exists():
        path = Path(f"{base}-{suffix}")
        suffix += 1
    path.mkdir(parents=True)
    return path


def write_csv(path, rows: Sequence[dict], fieldnames: Sequence[str]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="", encoding="utf-8") as f:
        writer = csv.DictWriter(f, fieldnames=list(fieldnames))
        writer.writeheader()
        for row in rows:
            writer.writerow({k: (repr(v) if isinstance(v, float) else v) for k, v in row.items()})
    return path


def write_jsonl(path, records: Iterable[dict]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8") as f:
        for record in records:
            f.write(json.dumps(record) + "\n")
    return path


def write_json(path, data) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(data, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")
    return path


def read_sample_column(path) -> np.ndarray:
    """One float per line; blank lines are skipped.

    Raises:
        SampleFileError: unreadable file, non-numeric or non-finite line, or no samples
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise SampleFileError(path, 0, f"cannot read sample file ({e})") from e

    values = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped:
            continue
        try:
            value = float(stripped)
        except ValueError:
            raise SampleFileError(path, lineno, f"not a number: {stripped[:40]!r}") from None
        if not math.isfinite(value):
            raise SampleFileError(path, lineno, f"non-finite value {stripped!r}")
        values.append(value)

    if not values:
        raise SampleFileError(path, 0, "no samples in file")
    return np.array(values, dtype=np.float64)
