# config.py - application settings
from typing import Optional

from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    """Settings loaded from the environment (PCF_ prefix) or a .env file."""

    model_config = {
        "env_file": ".env",
        "env_file_encoding": "utf-8",
        "env_prefix": "PCF_",
        "case_sensitive": False,
        "extra": "ignore",
    }

    # ==================== Application ====================
    APP_NAME: str = "pcfcolor"
    APP_VERSION: str = "1.0.0"

    # ==================== Logging ====================
    LOG_LEVEL: str = "INFO"
    LOG_FILE: Optional[str] = None
    LOG_ROTATION: str = "10 MB"
    LOG_RETENTION: str = "30 days"

    # ==================== Solvers ====================
    # Runtime invariant checks inside the solvers (witness sets, counting bounds).
    DEBUG_CHECKS: bool = True

    # ==================== Exact search ====================
    ORACLE_MAX_NODES: int = 5_000_000
    REFUTE_MAX_ASSIGNMENTS: int = 100_000

    # ==================== Instance generation ====================
    RANDOM_UNIVERSE_FACTOR: int = 3


settings = Settings()
