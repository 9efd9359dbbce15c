"""Worker-count resolution shared by the parallel code paths."""

from __future__ import annotations

import os

ENV_VAR = "BIRACK_LAB_JOBS"


def resolve_jobs(jobs: int | None = None) -> int:
    """Explicit ``jobs`` wins, then ``$BIRACK_LAB_JOBS``, then 1."""
    if jobs is None:
        raw = os.environ.get(ENV_VAR, "").strip()
        if not raw:
            return 1
        try:
            jobs = int(raw)
        except ValueError:
            raise ValueError(f"{ENV_VAR} must be an integer, got {raw!r}") from None
    if jobs < 1:
        raise ValueError(f"jobs must be >= 1, got {jobs}")
    return jobs
