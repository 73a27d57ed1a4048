"""
constants.py

Shared constants for the application

Key features:
- MIN_PARAM: smallest word length / alphabet size
- FLOAT_SIGNIFICANT_DIGITS, CSV_HEADER, JSON_SAFE_INTEGER: output formats
- EXIT_*: process exit codes
"""
MIN_PARAM = 2

FLOAT_SIGNIFICANT_DIGITS = 17

CSV_HEADER = ("n", "b", "pd_num", "pd_den", "pd_float")

JSON_SAFE_INTEGER = 2**53 - 1

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
