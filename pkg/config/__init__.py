"""
Configuration module for the palindromic density toolkit

Key features:
- settings: singleton Settings instance (from PALIN_* environment / .env)
- Settings: Pydantic settings class for limits, sampling and LOG_*
- messages: user-facing message keys and provider
- Constants: output formats and exit codes
"""

from .settings import settings, Settings
from .messages import (
    MessageKey,
    MessageProvider,
    DefaultMessageProvider,
    default_messages,
)
from .constants import (
    MIN_PARAM,
    FLOAT_SIGNIFICANT_DIGITS,
    CSV_HEADER,
    JSON_SAFE_INTEGER,
    EXIT_OK,
    EXIT_MISMATCH,
    EXIT_USAGE,
)

__all__ = [
    "settings",
    "Settings",
    "MessageKey",
    "MessageProvider",
    "DefaultMessageProvider",
    "default_messages",
    "MIN_PARAM",
    "FLOAT_SIGNIFICANT_DIGITS",
    "CSV_HEADER",
    "JSON_SAFE_INTEGER",
    "EXIT_OK",
    "EXIT_MISMATCH",
    "EXIT_USAGE",
]
