"""Special rim-hook tableaux, the signed inverse-Kostka data built on them,
and the shuffle words used for hook-shape coefficients.

A special rim-hook tableau of shape ``la`` and content ``alpha`` stacks
rim hooks that each meet the first column; the ``i``-th hook counted from
row 0 (the longest row) has ``alpha[i]`` cells. Since such a hook must
run from the first cell of the last row up to the end of some row ``r``,
it is pinned down by its length, so there is at most one tableau per
``(alpha, la)``.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Optional, Sequence

from ..errors import SizeMismatch
from .partitions import Partition, refinements


def _peel(la: Partition, length: int) -> Optional[tuple[Partition, int, int]]:
    """Remove the special rim hook of ``length`` cells from ``la``.

    Returns ``(rest, height, first_column_cells)`` or ``None``.
    """
    ell = len(la)
    for r in range(ell):
        if la[r] + (ell - 1 - r) == length:
            rest = list(la[:r]) + [la[i + 1] - 1 for i in range(r, ell - 1)]
            first_col = 1 + sum(1 for i in range(r, ell - 1) if la[i + 1] == 1)
            return tuple(p for p in rest if p), ell - r, first_col
    return None


@lru_cache(maxsize=None)
def _srht(alpha: tuple[int, ...], la: Partition) -> Optional[tuple[int, bool]]:
    """``(sign, flat)`` of the unique special rim-hook tableau, if any."""
    if not alpha:
        return (1, True) if not la else None
    if not la:
        return None
    peeled = _peel(la, alpha[-1])
    if peeled is None:
        return None
    rest, height, first_col = peeled
    sub = _srht(alpha[:-1], rest)
    if sub is None:
        return None
    sign, flat = sub
    return sign * (-1) ** (height - 1), flat and first_col == 1


def _check(alpha, la):
    alpha, la = tuple(alpha), tuple(la)
    if sum(alpha) != sum(la):
        raise SizeMismatch(f"|{alpha}| != |{la}|")
    return alpha, la


def special_rim_hook_count(alpha: Sequence[int], la: Sequence[int]) -> int:
    """``K'_n(alpha, la)``: signed count of special rim-hook tableaux."""
    alpha, la = _check(alpha, la)
    res = _srht(alpha, la)
    return 0 if res is None else res[0]


def is_flat(alpha: Sequence[int], la: Sequence[int]) -> bool:
    """A special rim-hook tableau exists and each hook has one first-column cell."""
    alpha, la = _check(alpha, la)
    res = _srht(alpha, la)
    return res is not None and res[1]


@lru_cache(maxsize=None)
def _k_star_sum(alpha: tuple[int, ...], la: Partition) -> int:
    return sum(special_rim_hook_count(beta, la) for beta in refinements(alpha))


def k_star(alpha: Sequence[int], la: Sequence[int], method: str = "flat") -> int:
    """``K*_n(alpha, la)``.

    ``method="flat"`` uses the flatness rule (``K'`` when flat, else 0);
    ``method="sum"`` sums ``K'`` over every composition finer than ``alpha``.
    """
    alpha, la = _check(alpha, la)
    if method == "flat":
        res = _srht(alpha, la)
        return res[0] if res is not None and res[1] else 0
    if method == "sum":
        return _k_star_sum(alpha, la)
    raise ValueError(f"unknown method {method!r}")


def shuffle_words_Dk(n: int, k: int) -> list[tuple[int, ...]]:
    """Shuffles of ``(n, n-1, ..., k+1)`` with ``(1, ..., k-1)``, each followed by ``k``.

    These are the permutations whose inverse descent set is ``{k, ..., n-1}``.
    """
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    big = list(range(n, k, -1))
    small = list(range(1, k))
    total = len(big) + len(small)
    out = []
    for slots in combinations(range(total), len(small)):
        word, bi, si = [], 0, 0
        slot_set = set(slots)
        for pos in range(total):
            if pos in slot_set:
                word.append(small[si])
                si += 1
            else:
                word.append(big[bi])
                bi += 1
        out.append(tuple(word) + (k,))
    return sorted(out)
