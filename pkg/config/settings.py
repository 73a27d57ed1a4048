"""
Application configuration and environment-based settings
"""

from pydantic_settings import BaseSettings, SettingsConfigDict
from pydantic import Field, field_validator
from typing import Literal

class Settings(BaseSettings):
    """
    Application configuration settings

    Every setting can be overridden with a PALIN_-prefixed environment variable
    (or a .env file); command-line flags take precedence over both

    Limits:
    - ENUMERATION_CAP: largest multiset space the oracle enumerates (default: 10**7)
    - PARTITION_CAP: largest n for multiplicity profiles (default: 120)
    - SEARCH_MAX_N: largest n for the arrangement search (default: 10)
    - EXACT_PARAM_CAP: largest n or b accepted by the CLI where counts are exact (pd, grid, profiles) (default: 10**6)
    - GRID_CELL_CAP: largest number of grid cells (default: 10**6)

    Sampling:
    - DEFAULT_DRAWS, DEFAULT_SEED, CONFIDENCE, SAMPLE_BLOCK_SIZE

    Logging:
    - LOG_LEVEL: Logging level (default: "WARNING")
    - LOG_TO_FILE: Enable file logging (default: False)
    - LOG_FILE_PATH: Path to log file (default: "logs/palindromic-density.log")
    - LOG_FILE_RETENTION: Days to retain logs (default: 7)
    """

    APP_NAME: str = Field(
        default="Palindromic Density",
        description="Application name (optional, has default)"
    )
    APP_VERSION: str = Field(
        default="1.0.0",
        description="Application version (optional, has default)"
    )

    # Limits
    ENUMERATION_CAP: int = Field(
        default=10_000_000,
        ge=1,
        description="Maximum number of multisets the oracle may enumerate"
    )
    PARTITION_CAP: int = Field(
        default=120,
        ge=1,
        description="Maximum n for multiplicity profile enumeration"
    )
    SEARCH_MAX_N: int = Field(
        default=10,
        ge=1,
        le=12,
        description="Maximum n for the exhaustive arrangement search"
    )
    EXACT_PARAM_CAP: int = Field(
        default=1_000_000,
        ge=2,
        description="Maximum n and b accepted on the command line where counts are exact"
    )
    GRID_CELL_CAP: int = Field(
        default=1_000_000,
        ge=1,
        description="Maximum number of (n, b) cells in one grid"
    )

    # Sampling
    DEFAULT_DRAWS: int = Field(
        default=100_000,
        ge=1,
        description="Number of draws when --draws is not given"
    )
    DEFAULT_SEED: int = Field(
        default=20240101,
        ge=0,
        lt=2**64,
        description="Seed when --seed is not given"
    )
    CONFIDENCE: float = Field(
        default=0.99,
        gt=0.0,
        lt=1.0,
        description="Confidence level of the Wilson score interval"
    )
    SAMPLE_BLOCK_SIZE: int = Field(
        default=16_384,
        ge=1,
        description="Draws per independently seeded sampling block"
    )
    WORKERS: int = Field(
        default=1,
        ge=1,
        description="Worker threads for grid, verify and sample"
    )

    # Logging settings
    LOG_LEVEL: Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"] = Field(
        default="WARNING",
        description="Logging level (optional, has default)"
    )
    LOG_FORMAT: str = Field(
        default="%(asctime)s | %(levelname)-8s | %(module)s:%(funcName)s:%(lineno)d - %(message)s",
        description="Default log format (can be customized if needed)"
    )
    LOG_DATE_FORMAT: str = Field(
        default="%Y-%m-%d %H:%M:%S",
        description="Date/time format for logs"
    )
    LOG_TO_FILE: bool = Field(
        default=False,
        description="If true, enable logging to a file"
    )
    LOG_FILE_PATH: str = Field(
        default="logs/palindromic-density.log",
        description="Path to log file"
    )
    LOG_FILE_ROTATION: str = Field(
        default="midnight",
        description="Log file rotation interval"
    )
    LOG_FILE_RETENTION: int = Field(
        default=7,
        ge=1,
        description="Number of days to retain log files"
    )

    @field_validator("LOG_LEVEL", mode="before")
    @classmethod
    def normalize_log_level(cls, v: str) -> str:
        """Accept lower-case level names from the environment"""
        return v.strip().upper() if isinstance(v, str) else v

    model_config = SettingsConfigDict(
        env_prefix="PALIN_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore"
    )

settings = Settings()
