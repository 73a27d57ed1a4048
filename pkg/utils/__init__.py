"""
Utility modules for the palindromic density toolkit

Provides shared utilities including logging, exception handling and number formatting
"""

from .exceptions import (
    PalindromicDensityError,
    ValidationError,
    CapExceededError,
    NotPalindromicError,
    SearchRefusedError,
    OutputError,
    VerificationError,
)
from .logger import logger, setup_logger
from .formatting import format_decimal, format_fraction

__all__ = [
    "PalindromicDensityError",
    "ValidationError",
    "CapExceededError",
    "NotPalindromicError",
    "SearchRefusedError",
    "OutputError",
    "VerificationError",
    "logger",
    "setup_logger",
    "format_decimal",
    "format_fraction",
]
