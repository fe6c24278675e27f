"""Counting symmetric Brauer diagrams."""

from __future__ import annotations

from functools import lru_cache
from math import factorial


@lru_cache(maxsize=None)
def count_recursion(k: int) -> int:
    """``a_k = a_{k-1} + 2(k-1) a_{k-2}`` with ``a_0 = a_1 = 1``."""
    if k < 0:
        raise ValueError("index must be non-negative")
    a, b = 1, 1
    for j in range(2, k + 1):
        a, b = b, b + 2 * (j - 1) * a
    return b if k >= 1 else a


def count_closed(n: int) -> int:
    """Closed double sum for the number of sigma-symmetric diagrams on 2n strands."""
    if n < 0:
        raise ValueError("rank must be non-negative")
    total = 0
    for i in range(n + 1):
        inner = sum(
            factorial(n) // (factorial(p) * factorial((i - p) // 2) * factorial(n - i))
            for p in range(i % 2, i + 1, 2)
        )
        total += inner**2 * 2 ** (n - i) * factorial(n - i)
    return total


def count_symmetric_matchings(size: int) -> int:
    """Brute force: perfect matchings of ``2*size`` points fixed by the mirror ``x -> 2*size-1-x``."""
    points = 2 * size

    def rec(free: frozenset[int]) -> int:
        if not free:
            return 1
        x = min(free)
        mx = points - 1 - x
        total = 0
        for y in free:
            if y == x:
                continue
            my = points - 1 - y
            pair = {x, y}
            image = {mx, my}
            if pair == image:
                total += rec(free - pair)
            elif not pair & image and image <= free:
                total += rec(free - pair - image)
        return total

    return rec(frozenset(range(points)))
