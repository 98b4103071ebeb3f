"""Deterministic process-pool sharding.

Work items are split into contiguous chunks handed to at most ``threads``
workers; results come back in chunk order, so totals and concatenations are
identical for any worker count.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Sequence, TypeVar

T = TypeVar("T")

_MIN_ITEMS_PER_WORKER = 64


def split_chunks(items: Sequence, parts: int) -> list[Sequence]:
    step, extra = divmod(len(items), parts)
    out = []
    start = 0
    for k in range(parts):
        size = step + (1 if k < extra else 0)
        if size:
            out.append(items[start : start + size])
        start += size
    return out


def map_chunks(worker: Callable[[tuple], T], items: Sequence, threads: int, *shared) -> list[T]:
    """Apply ``worker((shared..., chunk))`` to contiguous chunks of ``items``.

    Returns per-chunk results in order.  Runs inline when a pool cannot pay
    for itself.
    """
    if threads <= 1 or len(items) < 2 * _MIN_ITEMS_PER_WORKER:
        return [worker((*shared, items))] if items else []
    chunks = split_chunks(items, threads)
    with ProcessPoolExecutor(max_workers=len(chunks)) as pool:
        return list(pool.map(worker, [(*shared, chunk) for chunk in chunks]))
