"""
Vectorised enumeration of S_n for counting odd diagrams.

``count_odd_diagrams(n)`` never materialises permutations as Python
objects: S_n is generated in lexicographic blocks (one per leading value)
as ``uint8`` arrays, each row is reduced to its odd-diagram row masks, and
distinct mask rows are counted with ``np.unique``.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache

import numpy as np

__all__ = ["COUNT_GUARD", "KNOWN_O", "perm_array", "odd_mask_rows",
           "distinct_odd_diagrams", "count_odd_diagrams", "bell_number"]

COUNT_GUARD = 11

# number of distinct odd diagrams for n = 1..10
KNOWN_O = (1, 2, 5, 17, 70, 351, 2041, 13732, 103873, 882213)


@lru_cache(maxsize=2)
def perm_array(m: int) -> np.ndarray:
    """All permutations of ``0..m-1`` as rows, lexicographically ordered."""
    if m == 0:
        return np.zeros((1, 0), dtype=np.uint8)
    rest = perm_array(m - 1)
    blocks = []
    for lead in range(m):
        tail = rest + (rest >= lead)
        head = np.full((tail.shape[0], 1), lead, dtype=np.uint8)
        blocks.append(np.hstack([head, tail.astype(np.uint8)]))
    out = np.vstack(blocks)
    out.flags.writeable = False
    return out


def _block(n: int, lead: int) -> np.ndarray:
    """The permutations of ``1..n`` starting with ``lead + 1``."""
    rest = perm_array(n - 1)
    tail = (rest + (rest >= lead)).astype(np.uint8)
    head = np.full((tail.shape[0], 1), lead, dtype=np.uint8)
    return np.hstack([head, tail]) + np.uint8(1)


def odd_mask_rows(words: np.ndarray) -> np.ndarray:
    """Row ``i`` mask: bit ``w(x)`` for each ``x = i+1, i+3, ...`` with ``w(x) < w(i)``."""
    count, n = words.shape
    masks = np.zeros((count, n), dtype=np.uint16)
    one = np.uint16(1)
    for i in range(n):
        top = words[:, i]
        acc = masks[:, i]
        for x in range(i + 1, n, 2):
            below = words[:, x] < top
            acc |= below.astype(np.uint16) * (one << words[:, x].astype(np.uint16))
    return masks


def _distinct_in_block(args) -> np.ndarray:
    n, lead = args
    return np.unique(odd_mask_rows(_block(n, lead)), axis=0)


def distinct_odd_diagrams(n: int, workers: int = 1) -> np.ndarray:
    """Sorted array of distinct odd-diagram mask rows over S_n."""
    if not 1 <= n <= COUNT_GUARD:
        raise ValueError(f"counting needs 1 <= n <= {COUNT_GUARD}, got {n}")
    jobs = [(n, lead) for lead in range(n)]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            parts = list(pool.map(_distinct_in_block, jobs))
    else:
        parts = [_distinct_in_block(job) for job in jobs]
    # blocks are merged in lead order, then sorted by np.unique: output is deterministic
    return np.unique(np.vstack(parts), axis=0)


def count_odd_diagrams(n: int, workers: int = 1) -> int:
    return int(distinct_odd_diagrams(n, workers).shape[0])


def bell_number(n: int) -> int:
    """Bell numbers through the Bell triangle."""
    if n < 0:
        raise ValueError("Bell numbers need n >= 0")
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for value in row:
            nxt.append(nxt[-1] + value)
        row = nxt
    return row[0]
