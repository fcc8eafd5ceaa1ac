from functools import lru_cache
from itertools import product
from typing import Iterator, Optional, Tuple

import numpy as np


def _with_l1(rank: int, total: int, bound: int) -> Iterator[Tuple[int, ...]]:
    if rank == 0:
        if total == 0:
            yield ()
        return
    top = min(total, bound)
    for a in range(top, -top - 1, -1):
        rest = total - abs(a)
        if rest > (rank - 1) * bound:
            continue
        for tail in _with_l1(rank - 1, rest, bound):
            yield (a,) + tail


def small_vectors(rank: int, bound: int, max_l1: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    """Nonzero integer vectors with entries in [-bound, bound].

    Ordered by L1 norm, then lexicographically descending; lazy, so callers
    that stop at the first hit never pay for the whole box.
    """
    limit = rank * bound if max_l1 is None else min(max_l1, rank * bound)
    for total in range(1, limit + 1):
        yield from _with_l1(rank, total, bound)


@lru_cache(maxsize=32)
def box(rank: int, bound: int) -> np.ndarray:
    """All integer vectors in [-bound, bound]^rank as rows, zero excluded.

    Rows are sorted by L1 norm and then lexicographically descending, the
    same order small_vectors produces. The result is cached and read-only.
    """
    axis = np.arange(bound, -bound - 1, -1, dtype=np.int64)
    points = np.array(list(product(axis, repeat=rank)), dtype=np.int64).reshape(-1, rank)
    l1 = np.abs(points).sum(axis=1)
    # product() already yields lex descending; a stable sort keeps it within a shell
    order = np.argsort(l1, kind="stable")
    points = points[order]
    points = points[np.abs(points).sum(axis=1) > 0]
    points.setflags(write=False)
    return points
