"""
설정 로드

config/config.json 을 읽고 .env / 환경변수(KSP_*)로 덮어쓴다.
"""

import json
import os
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv

from .errors import ConfigError

PROJECT_ROOT = Path(__file__).resolve().parents[2]
DEFAULT_CONFIG_PATH = PROJECT_ROOT / "config" / "config.json"

BACKENDS = ("exact", "float")


@dataclass(frozen=True)
class LoggingSettings:
    level: str = "INFO"
    file: Optional[str] = None
    max_size_mb: int = 100
    backup_count: int = 5


@dataclass(frozen=True)
class SolverSettings:
    # EnumerateAll 결과 중 리포트에 나열할 최대 개수 (None = 전부)
    max_solutions: Optional[int] = None


@dataclass(frozen=True)
class Settings:
    backend: str = "exact"
    float_tolerance: float = 1e-9
    jobs: int = 1
    indent: int = 2
    solver: SolverSettings = field(default_factory=SolverSettings)
    logging: LoggingSettings = field(default_factory=LoggingSettings)

    def with_overrides(self, **kwargs) -> "Settings":
        """None 이 아닌 값만 덮어쓴 새 Settings 반환"""
        changes = {k: v for k, v in kwargs.items() if v is not None}
        return replace(self, **changes)


def _env_overrides(raw: dict) -> dict:
    backend = os.getenv("KSP_BACKEND")
    if backend:
        raw["backend"] = backend
    jobs = os.getenv("KSP_JOBS")
    if jobs:
        if not jobs.strip().isdigit():
            raise ConfigError(f"KSP_JOBS must be a positive integer, got {jobs!r}")
        raw["jobs"] = int(jobs)

    log = raw.setdefault("logging", {})
    level = os.getenv("KSP_LOG_LEVEL")
    if level:
        log["level"] = level
    log_file = os.getenv("KSP_LOG_FILE")
    if log_file is not None:
        # 빈 문자열이면 파일 로깅 끔
        log["file"] = log_file or None
    return raw


def load_settings(path: Optional[str] = None) -> Settings:
    """
    설정 파일 + 환경변수를 합쳐 Settings 생성

    Args:
        path: 설정 파일 경로. None 이면 config/config.json

    Returns:
        Settings

    Raises:
        ConfigError: 잘못된 설정 값 또는 깨진 JSON
    """
    load_dotenv()

    config_path = Path(path) if path else DEFAULT_CONFIG_PATH
    raw: dict = {}
    if config_path.exists():
        try:
            with open(config_path, "r", encoding="utf-8") as f:
                raw = json.load(f)
        except json.JSONDecodeError as e:
            raise ConfigError(f"config file {config_path} is not valid JSON: {e}") from None

    raw = _env_overrides(raw)

    backend = raw.get("backend", "exact")
    if backend not in BACKENDS:
        raise ConfigError(f"backend must be one of {BACKENDS}, got {backend!r}")

    log_raw = raw.get("logging", {})
    solver_raw = raw.get("solver", {})
    output_raw = raw.get("output", {})

    return Settings(
        backend=backend,
        float_tolerance=float(raw.get("float_tolerance", 1e-9)),
        jobs=max(1, int(raw.get("jobs", 1))),
        indent=int(output_raw.get("indent", 2)),
        solver=SolverSettings(max_solutions=solver_raw.get("max_solutions")),
        logging=LoggingSettings(
            level=log_raw.get("level", "INFO"),
            file=log_raw.get("file"),
            max_size_mb=int(log_raw.get("max_size_mb", 100)),
            backup_count=int(log_raw.get("backup_count", 5)),
        ),
    )
