"""
Custom exception hierarchy: base error plus validation, cap, palindromicity, search, output and verification errors
"""

from typing import Any, Optional, Dict

from config.constants import EXIT_MISMATCH, EXIT_USAGE

class PalindromicDensityError(Exception):
    """
    Base exception that carries a code, human-readable message and process exit code plus optional extra data
    """
    code: str = "GENERAL_ERROR"
    message: str = "An unexpected error occurred"
    exit_code: int = EXIT_USAGE

    def __init__(
        self,
        message: Optional[str] = None,
        code: Optional[str] = None,
        exit_code: Optional[int] = None,
        **kwargs: Any,
    ):
        self.message = message or self.message
        self.code = code or self.code
        self.exit_code = exit_code if exit_code is not None else self.exit_code
        self.extra = kwargs

        super().__init__(self.message)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "error": {
                "code": self.code,
                "message": self.message,
                "exit_code": self.exit_code,
                **self.extra,
            }
        }

    def __str__(self) -> str:
        return f"{self.code} ({self.exit_code}): {self.message}"

class ValidationError(PalindromicDensityError):
    """
    Exception raised when parameters fail validation (n < 2, b < 2, empty grid, ...)
    """
    code = "INVALID_PARAMETERS"
    message = "Invalid parameters provided"

class CapExceededError(PalindromicDensityError):
    """
    Exception raised when an enumeration would exceed its configured cap; extra carries size and cap
    """
    code = "CAP_EXCEEDED"
    message = "Enumeration cap exceeded"

class NotPalindromicError(PalindromicDensityError):
    """
    Exception raised when a bijection step receives a multiset that is not palindromic
    """
    code = "NOT_PALINDROMIC"
    message = "Multiset is not palindromic"

class SearchRefusedError(PalindromicDensityError):
    """
    Exception raised when the arrangement search is asked for a word longer than SEARCH_MAX_N
    """
    code = "SEARCH_REFUSED"
    message = "Arrangement search refused for this word length"

class OutputError(PalindromicDensityError):
    """
    Exception raised when an output file cannot be written; extra carries path
    """
    code = "OUTPUT_ERROR"
    message = "Failed to write output"

class VerificationError(PalindromicDensityError):
    """
    Exception raised when a closed form disagrees with the enumeration oracle; extra carries n and b
    """
    code = "VERIFICATION_MISMATCH"
    message = "Closed form disagrees with brute-force enumeration"
    exit_code = EXIT_MISMATCH
