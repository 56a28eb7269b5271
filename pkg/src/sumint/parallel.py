"""Deterministic chunked execution for scan workloads."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, List, Sequence, TypeVar

T = TypeVar("T")
R = TypeVar("R")

_MIN_CHUNK = 512


def run_chunked(worker: Callable[[Sequence[T]], R], items: Iterable[T], jobs: int = 1) -> List[R]:
    """Apply ``worker`` to contiguous chunks of ``items``, optionally in processes.

    Partial results come back in chunk order, so any associative merge sees
    the same sequence no matter how many workers ran; small workloads stay in
    process.  Falls back to serial execution if worker processes cannot be
    spawned.
    """
    items = list(items)
    if not items:
        return []
    if jobs is None or jobs < 1:
        jobs = 1
    if jobs == 1 or len(items) <= _MIN_CHUNK:
        return [worker(items)]
    nchunks = min(jobs * 4, -(-len(items) // _MIN_CHUNK))
    size = -(-len(items) // nchunks)
    chunks = [items[i : i + size] for i in range(0, len(items), size)]
    try:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(worker, chunks))
    except (OSError, PermissionError):
        return [worker(chunk) for chunk in chunks]
