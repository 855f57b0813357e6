"""Utility functions"""
from .io import SampleFileError, make_run_dir, read_sample_column, write_csv, write_json, write_jsonl

__all__ = [
    "SampleFileError",
    "make_run_dir",
    "read_sample_column",
    "write_csv",
    "write_json",
    "write_jsonl",
]
