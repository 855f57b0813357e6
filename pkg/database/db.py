# database/db.py - SQLite run 레지스트리
import json
import sqlite3
from pathlib import Path

from config.settings import RUNS_DB_PATH

DB_PATH = Path(RUNS_DB_PATH)

RUN_STATUSES = ("running", "completed", "failed")

_COLUMNS = "id, command, status, run_dir, seed, created_at, updated_at, metadata"


def _connect():
    DB_PATH.parent.mkdir(parents=True, exist_ok=True)
    return sqlite3.connect(DB_PATH)


def init_database():
    """데이터베이스 초기화"""
    conn = _connect()
    cursor = conn.cursor()

    cursor.execute("""
        CREATE TABLE IF NOT EXISTS runs (
            id INTEGER PRIMARY KEY AUTOINCREMENT,
            command TEXT NOT NULL,
            status TEXT NOT NULL,
            run_dir TEXT,
            seed INTEGER,
            created_at DATETIME DEFAULT CURRENT_TIMESTAMP,
            updated_at DATETIME DEFAULT CURRENT_TIMESTAMP,
            metadata TEXT
        )
    """)

    conn.commit()
    conn.close()


def create_run(command: str, run_dir: str, seed: int | None = None, *, status: str = "running", metadata: dict | None = None):
    """새 run 등록"""
    conn = _connect()
    cursor = conn.cursor()
    cursor.execute(
        """
        INSERT INTO runs (command, status, run_dir, seed, metadata)
        VALUES (?, ?, ?, ?, ?)
        """,
        (command, status, str(run_dir), seed, json.dumps(metadata or {})),
    )
    run_id = cursor.lastrowid
    conn.commit()
    conn.close()
    return run_id


def _row_to_run_dict(row):
    run_id, command, status, run_dir, seed, created_at, updated_at, metadata_json = row
    return {
        "id": run_id,
        "command": command,
        "status": status,
        "run_dir": run_dir,
        "seed": seed,
        "created_at": created_at,
        "updated_at": updated_at,
        "metadata": json.loads(metadata_json) if metadata_json else {},
    }


def get_run(run_id: int):
    """run 단건 조회"""
    conn = _connect()
    cursor = conn.cursor()
    cursor.execute(f"SELECT {_COLUMNS} FROM runs WHERE id = ?", (run_id,))
    row = cursor.fetchone()
    conn.close()
    return _row_to_run_dict(row) if row else None


def list_runs(*, limit: int = 20, offset: int = 0, command: str | None = None, status: str | None = None):
    """run 목록 조회 (최신순)"""
    conn = _connect()
    cursor = conn.cursor()

    query = [f"SELECT {_COLUMNS}", "FROM runs", "WHERE 1 = 1"]
    params: list = []

    if command:
        query.append("AND command = ?")
        params.append(command)

    if status:
        query.append("AND status = ?")
        params.append(status)

    query.append("ORDER BY id DESC")
    query.append("LIMIT ? OFFSET ?")
    params.extend([limit, offset])

    cursor.execute("\n".join(query), params)
    rows = cursor.fetchall()
    conn.close()
    return [_row_to_run_dict(row) for row in rows]


def count_runs(*, command: str | None = None, status: str | None = None):
    conn = _connect()
    cursor = conn.cursor()

    query = ["SELECT COUNT(*) FROM runs WHERE 1 = 1"]
    params: list = []
    if command:
        query.append("AND command = ?")
        params.append(command)
    if status:
        query.append("AND status = ?")
        params.append(status)

    cursor.execute("\n".join(query), params)
    total = cursor.fetchone()[0]
    conn.close()
    return total


def update_run_status(run_id: int, status: str, metadata: dict | None = None):
    """run 상태 업데이트 (metadata 는 기존 값에 병합)"""
    if status not in RUN_STATUSES:
        raise ValueError(f"unknown run status {status!r}")
    conn = _connect()
    cursor = conn.cursor()

    fields = ["status = ?", "updated_at = CURRENT_TIMESTAMP"]
    params: list = [status]

    if metadata is not None:
        cursor.execute("SELECT metadata FROM runs WHERE id = ?", (run_id,))
        row = cursor.fetchone()
        merged = json.loads(row[0]) if row and row[0] else {}
        merged.update(metadata)
        fields.append("metadata = ?")
        params.append(json.dumps(merged))

    params.append(run_id)
    cursor.execute(f"UPDATE runs SET {', '.join(fields)} WHERE id = ?", params)
    conn.commit()
    conn.close()


def delete_run(run_id: int) -> bool:
    """run 삭제 (없는 id 면 False)"""
    conn = _connect()
    cursor = conn.cursor()
    cursor.execute("DELETE FROM runs WHERE id = ?", (run_id,))
    deleted = cursor.rowcount > 0
    conn.commit()
    conn.close()
    return deleted
