# tests/test_db.py - run 레지스트리 테스트
import pytest

from database import db


@pytest.fixture(autouse=True)
def schema():
    db.init_database()


def test_create_and_get_run():
    run_id = db.create_run("train", "out/train-1", 3, metadata={"f_goal": 1.0})
    run = db.get_run(run_id)
    assert run["command"] == "train"
    assert run["status"] == "running"
    assert run["seed"] == 3
    assert run["metadata"] == {"f_goal": 1.0}


def test_get_missing_run():
    assert db.get_run(999) is None


def test_list_runs_newest_first_with_filters():
    first = db.create_run("train", "a")
    second = db.create_run("eval", "b")
    third = db.create_run("train", "c", status="completed")
    assert [r["id"] for r in db.list_runs()] == [third, second, first]
    assert [r["id"] for r in db.list_runs(command="train")] == [third, first]
    assert [r["id"] for r in db.list_runs(status="completed")] == [third]
    assert [r["id"] for r in db.list_runs(limit=1, offset=1)] == [second]
    assert db.count_runs() == 3
    assert db.count_runs(command="train") == 2


def test_update_status_merges_metadata():
    """상태 변경 시 metadata 는 기존 값에 병합"""
    run_id = db.create_run("compare", "c", metadata={"f_goal": 1.0})
    db.update_run_status(run_id, "completed", {"verdict": "pi_baseline"})
    run = db.get_run(run_id)
    assert run["status"] == "completed"
    assert run["metadata"] == {"f_goal": 1.0, "verdict": "pi_baseline"}


def test_update_unknown_status():
    run_id = db.create_run("train", "a")
    with pytest.raises(ValueError):
        db.update_run_status(run_id, "paused")


def test_delete_run():
    run_id = db.create_run("rollout", "r")
    assert db.delete_run(run_id) is True
    assert db.get_run(run_id) is None
    assert db.delete_run(run_id) is False
    assert db.count_runs() == 0
