# tests/test_io.py - run 디렉토리 / 샘플 파일 테스트
import csv

import pytest

from utils.io import SampleFileError, make_run_dir, read_sample_column, write_csv


def test_read_sample_column(tmp_path):
    path = tmp_path / "samples.txt"
    path.write_text("0.01\n\n-0.02\n  0.005  \n", encoding="utf-8")
    assert read_sample_column(path).tolist() == [0.01, -0.02, 0.005]


@pytest.mark.parametrize(
    "text, line",
    [
        ("raw\n0.1\n", 1),
        ("0.1\n0.2\nabc\n", 3),
        ("0.1\nnan\n", 2),
        ("inf\n", 1),
        ("", 0),
        ("\n\n", 0),
    ],
)
def test_malformed_sample_file(tmp_path, text, line):
    """문제가 된 줄 번호를 알려준다 (파일 전체 문제는 0)"""
    path = tmp_path / "samples.txt"
    path.write_text(text, encoding="utf-8")
    with pytest.raises(SampleFileError) as exc_info:
        read_sample_column(path)
    assert exc_info.value.line == line


def test_missing_sample_file(tmp_path):
    with pytest.raises(SampleFileError):
        read_sample_column(tmp_path / "nope.txt")


def test_make_run_dir(tmp_path):
    first = make_run_dir(tmp_path, "train")
    second = make_run_dir(tmp_path, "train")
    assert first != second
    assert first.name.startswith("train-") and first.is_dir() and second.is_dir()
    explicit = make_run_dir(tmp_path, "train", str(tmp_path / "mine"))
    assert explicit == tmp_path / "mine"


def test_write_csv_keeps_full_precision(tmp_path):
    path = write_csv(tmp_path / "curve.csv", [{"step": 1, "value": 0.1 + 0.2}], ["step", "value"])
    with path.open(newline="", encoding="utf-8") as f:
        rows = list(csv.DictReader(f))
    assert float(rows[0]["value"]) == 0.1 + 0.2
