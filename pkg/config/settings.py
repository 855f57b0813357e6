# config/settings.py - 환경 설정
import os
from dotenv import load_dotenv

load_dotenv()

# 출력 디렉토리 (run 별 하위 디렉토리가 생성됨)
OUTPUT_ROOT = os.getenv("OUTPUT_ROOT", "out")

# run 레지스트리 (sqlite)
RUNS_DB_PATH = os.getenv("RUNS_DB_PATH", "data/runs.db")

# 로그 레벨
LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO")
