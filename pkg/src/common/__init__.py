from .errors import (
    KspError,
    DomainError,
    ConfigError,
    ScalarError,
    ModeSetError,
    TransformError,
    StatisticsError,
    PauliExclusionError,
    TriggerError,
)
from .settings import Settings, LoggingSettings, load_settings
from .log import setup_logging

__all__ = [
    "KspError",
    "DomainError",
    "ConfigError",
    "ScalarError",
    "ModeSetError",
    "TransformError",
    "StatisticsError",
    "PauliExclusionError",
    "TriggerError",
    "Settings",
    "LoggingSettings",
    "load_settings",
    "setup_logging",
]
