"""Thread-pool helper for embarrassingly parallel per-face work."""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, Optional, TypeVar

T = TypeVar("T")
U = TypeVar("U")

ENV_VAR = "HYPERTREE_LAB_THREADS"


def default_workers() -> int:
    raw = os.environ.get(ENV_VAR, "")
    try:
        n = int(raw)
    except ValueError:
        return 1
    return max(1, n)


def parallel_map(fn: Callable[[T], U], items: Iterable[T],
                 workers: Optional[int] = None) -> list[U]:
    """Order-preserving map, threaded when more than one worker is asked for."""
    items = list(items)
    if workers is None:
        workers = default_workers()
    if workers <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))
