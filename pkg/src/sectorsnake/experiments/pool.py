"""Deterministic work pool: results merge in cell order, never arrival order."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Sequence


def default_jobs() -> int:
    env = os.environ.get("SECTORSNAKE_JOBS")
    if env:
        return max(1, int(env))
    return 1


def run_cells(fn: Callable, cells: Sequence, jobs: int = 1) -> list:
    """Map fn over cells; output order always equals input order."""
    if jobs <= 1 or len(cells) <= 1:
        return [fn(cell) for cell in cells]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, cells))
