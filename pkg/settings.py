#!/usr/bin/env python3
from typing import Optional

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class MinerSettings(BaseSettings):
    """Defaults for the CLI and MCP server, read from HYPERTRIPLET_* env vars or .env."""

    model_config = SettingsConfigDict(
        env_prefix="HYPERTRIPLET_",
        env_file=".env",
        extra="ignore"
    )

    input_path: Optional[str] = None
    input_format: str = "hyperlist"
    threads: int = Field(default=1, ge=1)
    degree_floor: int = Field(default=0, ge=0)
    brute_force_cap: int = Field(default=2_000_000, ge=1)
    log_level: str = "INFO"
    penwidth_scale: float = Field(default=1.0, gt=0)
    schema_version: str = "1"


def get_settings() -> MinerSettings:
    return MinerSettings()
