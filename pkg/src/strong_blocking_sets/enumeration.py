"""Deterministic subset enumeration.

This submodule ranks and unranks fixed-size subsets in lexicographic order
and splits rank ranges into contiguous work units, so that exhaustive scans
can be divided among workers and still produce identical results.

Exports:
    unrank: Subset of a given lexicographic rank.
    subset_masks: Bitmasks of the subsets in a rank range.
    partition: Split of `[0, total)` into contiguous chunks.
"""

from __future__ import annotations

from math import comb
from typing import TYPE_CHECKING

from .errors import InputValidationError

if TYPE_CHECKING:
    from collections.abc import Iterator


__all__: list[str] = [
    "partition",
    "subset_masks",
    "unrank",
]


def unrank(rank: int, n: int, r: int) -> tuple[int, ...]:
    """Return the `r`-subset of `range(n)` with lexicographic rank `rank`.

    Raises:
        InputValidationError: If `rank` is outside `[0, C(n, r))`.

    """
    total = comb(n, r)
    if not 0 <= rank < max(total, 1):
        msg = f"Rank {rank} is outside [0, {total})."
        raise InputValidationError(error=IndexError(msg))

    subset: list[int] = []
    x = 0
    for remaining in range(r, 0, -1):
        while True:
            block = comb(n - x - 1, remaining - 1)
            if rank < block:
                break
            rank -= block
            x += 1
        subset.append(x)
        x += 1
    return tuple(subset)


def subset_masks(
    n: int,
    r: int,
    start: int = 0,
    stop: int | None = None,
) -> Iterator[int]:
    """Yield bitmasks of `r`-subsets of `range(n)` with ranks in `[start, stop)`.

    Subsets are produced in lexicographic order of their sorted elements.
    """
    total = comb(n, r)
    stop = total if stop is None else min(stop, total)
    if start >= stop:
        return
    if r == 0:
        yield 0
        return

    subset = list(unrank(start, n, r))
    for _ in range(stop - start):
        yield sum(1 << i for i in subset)
        i = r - 1
        while i >= 0 and subset[i] == n - r + i:
            i -= 1
        if i < 0:
            return
        subset[i] += 1
        for j in range(i + 1, r):
            subset[j] = subset[j - 1] + 1


def partition(total: int, parts: int) -> list[tuple[int, int]]:
    """Split `[0, total)` into `parts` contiguous, nearly equal ranges."""
    parts = max(1, parts)
    return [
        ((total * rank) // parts, (total * (rank + 1)) // parts)
        for rank in range(parts)
    ]
