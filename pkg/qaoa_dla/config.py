from functools import lru_cache
import logging
from typing import Any
from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

DEFAULT_MAX_CLOSURE_QUBITS = 8
DEFAULT_CLOSURE_MAX_DIM = 70000
DEFAULT_FLOAT_TOLERANCE = 1e-10
DEFAULT_WEIGHT_TOLERANCE = 1e-12
DEFAULT_RECURSIVE_CAP = 7


def _positive_int(value: Any, default: int) -> int:
    try:
        parsed = int(str(value).strip())
    except Exception:  # noqa: BLE001
        return default
    return parsed if parsed > 0 else default


def _positive_float(value: Any, default: float) -> float:
    try:
        parsed = float(str(value).strip())
    except Exception:  # noqa: BLE001
        return default
    return parsed if parsed > 0 else default


class Settings(BaseSettings):
    model_config = SettingsConfigDict(env_file=".env", env_file_encoding="utf-8", extra="ignore")

    app_name: str = "qaoa-dla"
    app_env: str = Field(default="development", alias="DLA_ENV")
    log_level: str = Field(default="INFO", alias="DLA_LOG_LEVEL")

    max_closure_qubits: int = Field(default=DEFAULT_MAX_CLOSURE_QUBITS, alias="DLA_MAX_CLOSURE_QUBITS")
    closure_max_dim: int = Field(default=DEFAULT_CLOSURE_MAX_DIM, alias="DLA_CLOSURE_MAX_DIM")
    float_tolerance: float = Field(default=DEFAULT_FLOAT_TOLERANCE, alias="DLA_FLOAT_TOLERANCE")
    weight_tolerance: float = Field(default=DEFAULT_WEIGHT_TOLERANCE, alias="DLA_WEIGHT_TOLERANCE")
    recursive_cap: int = Field(default=DEFAULT_RECURSIVE_CAP, alias="DLA_RECURSIVE_CAP")

    batch_threads: int = Field(default=0, alias="DLA_THREADS")
    batch_brute_force: bool = Field(default=False, alias="DLA_BATCH_BRUTE_FORCE")
    redis_url: str = Field(default="redis://localhost:6379/0", alias="REDIS_URL")

    @field_validator("app_env", mode="before")
    @classmethod
    def _normalize_app_env(cls, value: Any) -> str:
        if isinstance(value, str):
            raw = value.strip().lower()
            return raw or "development"
        return "development"

    @field_validator("log_level", mode="before")
    @classmethod
    def _normalize_log_level(cls, value: Any) -> str:
        raw = str(value or "").strip().upper()
        level_names = getattr(logging, "getLevelNamesMapping", lambda: dict(logging._nameToLevel))()
        if raw in level_names:
            return raw
        return "INFO"

    @field_validator("max_closure_qubits", mode="before")
    @classmethod
    def _normalize_max_closure_qubits(cls, value: Any) -> int:
        return _positive_int(value, DEFAULT_MAX_CLOSURE_QUBITS)

    @field_validator("closure_max_dim", mode="before")
    @classmethod
    def _normalize_closure_max_dim(cls, value: Any) -> int:
        return _positive_int(value, DEFAULT_CLOSURE_MAX_DIM)

    @field_validator("recursive_cap", mode="before")
    @classmethod
    def _normalize_recursive_cap(cls, value: Any) -> int:
        return _positive_int(value, DEFAULT_RECURSIVE_CAP)

    @field_validator("float_tolerance", mode="before")
    @classmethod
    def _normalize_float_tolerance(cls, value: Any) -> float:
        return _positive_float(value, DEFAULT_FLOAT_TOLERANCE)

    @field_validator("weight_tolerance", mode="before")
    @classmethod
    def _normalize_weight_tolerance(cls, value: Any) -> float:
        return _positive_float(value, DEFAULT_WEIGHT_TOLERANCE)

    @field_validator("batch_threads", mode="before")
    @classmethod
    def _normalize_batch_threads(cls, value: Any) -> int:
        try:
            parsed = int(str(value).strip())
        except Exception:  # noqa: BLE001
            return 0
        return max(parsed, 0)


@lru_cache
def get_settings() -> Settings:
    return Settings()
