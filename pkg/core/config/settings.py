from __future__ import annotations

import os

from pydantic import Field

from core.foundation.models.strict_mode import FrozenModel

DEFAULT_ENUMERATION_CAP = 22


class Settings(FrozenModel):
    enumeration_cap: int = Field(description="Largest n for which 2^n subset enumeration is attempted", default=DEFAULT_ENUMERATION_CAP, ge=1)
    pi_budget: int = Field(description="Node budget of the complete proper interval ordering search", default=2_000_000, ge=1)
    exhaustive_min_limit: int = Field(description="Largest n accepted by the exhaustive-min labeling strategy", default=8, ge=1)
    workers: int = Field(description="Worker processes used by the subset enumeration", default=1, ge=1)
    log_level: str = Field(default="WARNING")
    host: str = Field(default="127.0.0.1")
    port: int = Field(default=8000)

    @classmethod
    def from_env(cls) -> Settings:
        """Read CM_CLOSURE_* variables (plus HOST/PORT for the MCP server), falling back to defaults."""
        env = {
            "enumeration_cap": os.getenv("CM_CLOSURE_ENUMERATION_CAP"),
            "pi_budget": os.getenv("CM_CLOSURE_PI_BUDGET"),
            "exhaustive_min_limit": os.getenv("CM_CLOSURE_EXHAUSTIVE_MIN_LIMIT"),
            "workers": os.getenv("CM_CLOSURE_WORKERS"),
            "log_level": os.getenv("CM_CLOSURE_LOG_LEVEL"),
            "host": os.getenv("HOST"),
            "port": os.getenv("PORT"),
        }
        return cls.model_validate({k: v for k, v in env.items() if v is not None})
