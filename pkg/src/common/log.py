"""로깅 설정 (colorlog 콘솔 + 회전 파일 핸들러)"""

import logging
import sys
from logging.handlers import RotatingFileHandler
from pathlib import Path

import colorlog

from .settings import LoggingSettings

FILE_FORMAT = "%(asctime)s - %(levelname)s - %(message)s"
CONSOLE_FORMAT = "%(log_color)s%(asctime)s - %(levelname)s - %(message)s"

_configured = False


def setup_logging(config: LoggingSettings) -> logging.Logger:
    """
    루트 로거 설정. 여러 번 호출해도 핸들러는 한 번만 붙는다.

    stdout 은 JSON 출력 전용이므로 콘솔 로그는 stderr 로 보낸다.
    """
    global _configured

    logger = logging.getLogger()
    if _configured:
        logger.setLevel(config.level.upper())
        return logger

    logger.handlers.clear()
    logger.setLevel(config.level.upper())

    console_handler = colorlog.StreamHandler(sys.stderr)
    console_handler.setFormatter(
        colorlog.ColoredFormatter(
            CONSOLE_FORMAT,
            log_colors={
                "DEBUG": "cyan",
                "INFO": "green",
                "WARNING": "yellow",
                "ERROR": "red",
                "CRITICAL": "bold_red",
            },
        )
    )
    logger.addHandler(console_handler)

    if config.file:
        Path(config.file).parent.mkdir(parents=True, exist_ok=True)
        file_handler = RotatingFileHandler(
            config.file,
            maxBytes=config.max_size_mb * 1024 * 1024,
            backupCount=config.backup_count,
            encoding="utf-8",
        )
        file_handler.setFormatter(logging.Formatter(FILE_FORMAT))
        logger.addHandler(file_handler)

    _configured = True
    return logger
