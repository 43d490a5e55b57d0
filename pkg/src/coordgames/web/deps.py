from __future__ import annotations

from fastapi import Request

from coordgames.core.settings import Settings


def get_settings(request: Request) -> Settings:
    # single source of truth set in app.lifespan
    return request.app.state.settings  # type: ignore[attr-defined]
