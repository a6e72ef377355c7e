import os
from functools import lru_cache

from dotenv import load_dotenv
from pydantic import BaseModel, Field, field_validator


class Settings(BaseModel):
    log_level: str = Field(default="WARNING", description="loguru level name")
    search_workers: int = Field(
        default=4, ge=1, le=64, description="Worker threads for family search"
    )
    strict: bool = Field(
        default=False, description="Treat known printed typos as verification failures"
    )

    @field_validator("log_level")
    @classmethod
    def normalize_level(cls, value: str) -> str:
        value = value.strip().upper()
        if value not in {"TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR", "CRITICAL"}:
            raise ValueError(f"unknown log level: {value}")
        return value

    @classmethod
    def from_env(cls) -> "Settings":
        load_dotenv()
        data = {}
        if "LOG_LEVEL" in os.environ:
            data["log_level"] = os.environ["LOG_LEVEL"]
        if "K3_SEARCH_WORKERS" in os.environ:
            data["search_workers"] = os.environ["K3_SEARCH_WORKERS"]
        if "K3_STRICT" in os.environ:
            data["strict"] = os.environ["K3_STRICT"].strip().lower() in {"1", "true", "yes"}
        return cls(**data)


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    return Settings.from_env()
