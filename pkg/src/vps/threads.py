"""Thread-count policy shared by the parallel kernels."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def thread_count() -> int:
    """Worker count from ``VPS_THREADS`` (default 1, malformed values fall back to 1)."""
    try:
        return max(1, int(os.environ.get("VPS_THREADS", "1")))
    except ValueError:
        return 1


def ordered_map(fn: Callable[[T], R], items: Iterable[T], threads: int | None = None) -> List[R]:
    """``[fn(x) for x in items]``, possibly on a thread pool; results keep input order."""
    threads = threads or thread_count()
    if threads == 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))
