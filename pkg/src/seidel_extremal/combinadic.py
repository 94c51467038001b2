"""Lexicographic ranking of k-subsets, used to split enumeration work by rank."""

from __future__ import annotations

from math import comb
from typing import Iterator, Sequence


def rank(subset: Sequence[int], n: int) -> int:
    """Position of the sorted ``subset`` of ``range(n)`` in lexicographic order."""
    k = len(subset)
    r = 0
    prev = -1
    for i, c in enumerate(subset):
        for v in range(prev + 1, c):
            r += comb(n - 1 - v, k - 1 - i)
        prev = c
    return r


def unrank(r: int, n: int, k: int) -> tuple[int, ...]:
    total = comb(n, k)
    if not 0 <= r < total:
        raise IndexError(f"rank {r} outside [0, {total})")
    out = []
    v = 0
    for i in range(k):
        while True:
            below = comb(n - 1 - v, k - 1 - i)
            if r < below:
                break
            r -= below
            v += 1
        out.append(v)
        v += 1
    return tuple(out)


def iter_subsets(n: int, k: int, start: int = 0, stop: int | None = None) -> Iterator[tuple[int, ...]]:
    """k-subsets of ``range(n)`` with ranks in ``[start, stop)``, in order."""
    total = comb(n, k)
    stop = total if stop is None else min(stop, total)
    if start >= stop:
        return
    c = list(unrank(start, n, k))
    for _ in range(stop - start):
        yield tuple(c)
        # advance to the lexicographic successor
        i = k - 1
        while i >= 0 and c[i] == n - k + i:
            i -= 1
        if i < 0:
            return
        c[i] += 1
        for j in range(i + 1, k):
            c[j] = c[j - 1] + 1


def split_ranks(total: int, parts: int) -> list[tuple[int, int]]:
    """Cut ``[0, total)`` into at most ``parts`` contiguous, nearly equal ranges."""
    parts = max(1, min(parts, total))
    bounds = [total * p // parts for p in range(parts + 1)]
    return [(a, b) for a, b in zip(bounds, bounds[1:]) if a < b]
