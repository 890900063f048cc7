"""Classical mod 2 Steenrod algebra, used as a reference for the u=1, a=0 shadow."""

from __future__ import annotations

from functools import lru_cache
from math import comb


def classical_adem(i: int, j: int) -> frozenset:
    """Sq^i Sq^j for 0 < i < 2j as a set of admissible words."""
    acc: set = set()
    for k in range(i // 2 + 1):
        top = j - k - 1
        if top >= 0 and comb(top, i - 2 * k) % 2:
            w = tuple(x for x in (i + j - k, k) if x)
            acc ^= {w}
    return frozenset(acc)


@lru_cache(maxsize=None)
def classical_reduce(word: tuple) -> frozenset:
    word = tuple(x for x in word if x)
    for t in range(len(word) - 1):
        if word[t] < 2 * word[t + 1]:
            acc: set = set()
            for w in classical_adem(word[t], word[t + 1]):
                acc ^= classical_reduce(word[:t] + w + word[t + 2:])
            return frozenset(acc)
    return frozenset({word})


def milnor_dimension(n: int) -> int:
    """Dimension in degree n: partitions of n into parts 2^i - 1, i >= 1."""
    parts = []
    p = 1
    while p <= n:
        parts.append(p)
        p = 2 * p + 1
    ways = [1] + [0] * n
    for part in parts:
        for t in range(part, n + 1):
            ways[t] += ways[t - part]
    return ways[n]


def classical_excess(word) -> int:
    w = list(word) + [0]
    return sum(w[t] - 2 * w[t + 1] for t in range(len(w) - 1))
