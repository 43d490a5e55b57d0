from __future__ import annotations

import json
import logging
import sys
from typing import Any

_LOGGER = "coordgames"


def setup_logging(level: int | str = logging.INFO) -> None:
    # stdout carries command output; logs go to stderr.
    logging.basicConfig(
        level=level,
        format="%(message)s",
        handlers=[logging.StreamHandler(sys.stderr)],
        force=True,
    )


def _dump(event: str, fields: dict[str, Any]) -> str:
    return json.dumps({"event": event, **fields}, ensure_ascii=False, default=str)


def log_json(event: str, **fields: Any) -> None:
    logger = logging.getLogger(_LOGGER)
    if logger.isEnabledFor(logging.INFO):
        logger.info(_dump(event, fields))
