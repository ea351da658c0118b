"""Environment-driven overrides for the enumeration and solver guards."""

from __future__ import annotations

import os

ENV_MAX_N = "OIDOM_MAX_N"


def env_max_n() -> int | None:
    """Value of the OIDOM_MAX_N override, or None when unset/invalid."""
    raw = os.environ.get(ENV_MAX_N)
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError:
        return None
