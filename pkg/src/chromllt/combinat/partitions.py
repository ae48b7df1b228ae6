"""Partitions and compositions as plain tuples of positive ints."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterator, Sequence

Partition = tuple[int, ...]
Composition = tuple[int, ...]


def is_partition(parts: Sequence[int]) -> bool:
    return all(p > 0 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def as_partition(parts: Sequence[int]) -> Partition:
    """Sort a multiset of nonnegative parts into a partition, dropping zeros."""
    return tuple(sorted((p for p in parts if p), reverse=True))


@lru_cache(maxsize=None)
def _partitions(n: int, max_part: int) -> tuple[Partition, ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse lexicographic order, ``(n)`` first."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return list(_partitions(n, n))


def compositions_of(n: int) -> list[Composition]:
    """All compositions of ``n``, ordered by their descent sets as bitmasks."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return [()]
    return [descents_to_composition(d, n) for d in _subsets(n - 1)]


def _subsets(m: int):
    for mask in range(1 << m):
        yield frozenset(i + 1 for i in range(m) if mask >> i & 1)


def conjugate(la: Sequence[int]) -> Partition:
    if not la:
        return ()
    return tuple(sum(1 for p in la if p > j) for j in range(la[0]))


def dominates(la: Sequence[int], mu: Sequence[int]) -> bool:
    """``la >= mu`` in dominance order (both of the same size)."""
    s = t = 0
    for i in range(max(len(la), len(mu))):
        s += la[i] if i < len(la) else 0
        t += mu[i] if i < len(mu) else 0
        if s < t:
            return False
    return True


def contains(outer: Sequence[int], inner: Sequence[int]) -> bool:
    if len(inner) > len(outer):
        return False
    return all(inner[i] <= outer[i] for i in range(len(inner)))


def composition_descents(alpha: Sequence[int]) -> frozenset[int]:
    """Partial sums of ``alpha`` except the total."""
    out, s = [], 0
    for a in alpha[:-1]:
        s += a
        out.append(s)
    return frozenset(out)


def descents_to_composition(descents, n: int) -> Composition:
    """``co(D)``: the composition of ``n`` whose partial sums are ``D``."""
    if n == 0:
        return ()
    cuts = sorted(descents)
    if cuts and (cuts[0] < 1 or cuts[-1] > n - 1):
        raise ValueError(f"descent set {cuts} not inside [1, {n - 1}]")
    out, prev = [], 0
    for c in cuts + [n]:
        out.append(c - prev)
        prev = c
    return tuple(out)


def refinements(alpha: Sequence[int]) -> Iterator[Composition]:
    """Compositions finer than ``alpha``, ``alpha`` itself included."""
    n = sum(alpha)
    base = composition_descents(alpha)
    free = [i for i in range(1, n) if i not in base]
    for r in range(len(free) + 1):
        for extra in combinations(free, r):
            yield descents_to_composition(base | set(extra), n)


def coarsenings(alpha: Sequence[int]) -> Iterator[Composition]:
    """Compositions coarser than ``alpha``, ``alpha`` itself included."""
    n = sum(alpha)
    base = sorted(composition_descents(alpha))
    for r in range(len(base) + 1):
        for keep in combinations(base, r):
            yield descents_to_composition(keep, n)


def is_hook(la: Sequence[int]) -> bool:
    return len(la) == 0 or all(p == 1 for p in la[1:])


def hook(k: int, n: int) -> Partition:
    """The hook ``(k, 1^(n-k))``."""
    if not 1 <= k <= n:
        raise ValueError(f"hook arm {k} outside [1, {n}]")
    return (k,) + (1,) * (n - k)
