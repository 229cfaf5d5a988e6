"""Configuration module - loads settings from environment variables."""

from pydantic_settings import BaseSettings
from pydantic import Field
from functools import lru_cache


class Settings(BaseSettings):
    """Toolkit settings loaded from environment variables."""

    # Dense engine
    dense_limit: int = Field(default=14, ge=1, le=20, alias="LRFRONT_DENSE_LIMIT")
    max_workers: int = Field(default=1, ge=1, alias="LRFRONT_MAX_WORKERS")

    # Series engine
    max_pauli_terms: int = Field(default=2_000_000, ge=1, alias="LRFRONT_MAX_PAULI_TERMS")
    series_tolerance: float = Field(default=1e-8, gt=0, alias="LRFRONT_SERIES_TOLERANCE")

    # Graph and snapshot caps
    path_enumeration_cap: int = Field(default=100_000, ge=1, alias="LRFRONT_PATH_ENUMERATION_CAP")
    lattice_site_cap: int = Field(default=1_000_000, ge=1, alias="LRFRONT_LATTICE_SITE_CAP")
    snapshot_site_cap: int = Field(default=5_000_000, ge=1, alias="LRFRONT_SNAPSHOT_SITE_CAP")

    # Logging
    log_level: str = Field(default="WARNING", alias="LRFRONT_LOG_LEVEL")

    class Config:
        env_file = ".env"
        env_file_encoding = "utf-8"
        extra = "ignore"


@lru_cache
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()
