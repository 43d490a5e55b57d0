from __future__ import annotations

from functools import lru_cache

from dotenv import find_dotenv, load_dotenv
from pydantic_settings import BaseSettings, SettingsConfigDict

# Always load the nearest .env regardless of CWD
load_dotenv(find_dotenv(usecwd=True), override=False)


class Settings(BaseSettings):
    # Exhaustive search (oracle, k-equilibrium checks, coalition dynamics)
    state_budget: int = 10_000_000

    # Dynamics
    max_steps: int = 10_000

    log_level: str = "INFO"

    model_config = SettingsConfigDict(
        env_file=None,         # dotenv already loaded above
        env_prefix="COORDGAMES_",
        case_sensitive=False,
    )


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    return Settings()


def resolve_budget(budget: int | None) -> int:
    return get_settings().state_budget if budget is None else budget
