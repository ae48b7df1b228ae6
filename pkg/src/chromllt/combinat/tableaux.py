"""Skew shapes, tableaux, and the classical tableau algorithms.

Indexing is English and zero-based: row 0 is the row of length
``outer[0]``, cell ``(i, j)`` sits in row ``i`` and column ``j``. The
content of a cell is ``i - j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterator, Mapping, Optional, Sequence

from ..errors import ShapeMismatch, SizeMismatch
from .partitions import Partition, contains, is_partition

Cell = tuple[int, int]


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition = ()

    def __post_init__(self):
        outer, inner = tuple(self.outer), tuple(p for p in self.inner if p)
        if not is_partition(outer) or not is_partition(inner):
            raise ShapeMismatch(f"not partitions: {outer} / {inner}")
        if not contains(outer, inner):
            raise ShapeMismatch(f"{inner} is not contained in {outer}")
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)

    def inner_row(self, i: int) -> int:
        return self.inner[i] if i < len(self.inner) else 0

    def cells(self) -> list[Cell]:
        """Cells in row-major order."""
        return [
            (i, j) for i, r in enumerate(self.outer) for j in range(self.inner_row(i), r)
        ]

    def __contains__(self, cell: Cell) -> bool:
        i, j = cell
        return 0 <= i < len(self.outer) and self.inner_row(i) <= j < self.outer[i]

    @property
    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)

    @property
    def is_straight(self) -> bool:
        return not self.inner

    def __str__(self):
        if not self.inner:
            return str(self.outer)
        return f"{self.outer}/{self.inner}"


def content(cell: Cell) -> int:
    i, j = cell
    return i - j


class Tableau:
    """A filling of a skew shape by positive integers.

    No ordering condition is imposed at construction; use
    :meth:`is_semistandard` / :meth:`is_standard` to check.
    """

    __slots__ = ("shape", "_entries")

    def __init__(self, shape: SkewShape, entries: Mapping[Cell, int]):
        if set(entries) != set(shape.cells()):
            raise ShapeMismatch(f"entries do not fill the shape {shape}")
        self.shape = shape
        self._entries = dict(entries)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Optional[int]]]) -> "Tableau":
        """Rows of entries; ``None`` marks a cell of the inner shape."""
        outer = tuple(len(r) for r in rows if len(r))
        inner = []
        entries = {}
        for i, r in enumerate(rows):
            k = 0
            while k < len(r) and r[k] is None:
                k += 1
            inner.append(k)
            for j in range(k, len(r)):
                if r[j] is None:
                    raise ShapeMismatch("inner cells must be left-justified")
                entries[(i, j)] = r[j]
        return cls(SkewShape(outer, tuple(inner)), entries)

    @classmethod
    def from_cells(cls, entries: Mapping[Cell, int], inner: Sequence[int] = ()) -> "Tableau":
        """Infer the outer shape from the occupied cells and the given inner shape."""
        inner = tuple(p for p in inner if p)
        nrows = max([i + 1 for i, _ in entries] + [len(inner)])
        outer = []
        for i in range(nrows):
            cols = [j for (r, j) in entries if r == i]
            base = inner[i] if i < len(inner) else 0
            outer.append(max(cols) + 1 if cols else base)
        while outer and outer[-1] == 0:
            outer.pop()
        return cls(SkewShape(tuple(outer), inner), entries)

    def __getitem__(self, cell: Cell) -> int:
        return self._entries[cell]

    def items(self):
        return sorted(self._entries.items())

    @property
    def entries(self) -> dict[Cell, int]:
        return dict(self._entries)

    def rows(self) -> list[list[Optional[int]]]:
        s = self.shape
        return [
            [None] * s.inner_row(i) + [self._entries[(i, j)] for j in range(s.inner_row(i), r)]
            for i, r in enumerate(s.outer)
        ]

    def __eq__(self, other):
        return isinstance(other, Tableau) and self.shape == other.shape and self._entries == other._entries

    def __hash__(self):
        return hash((self.shape, tuple(sorted(self._entries.items()))))

    def __repr__(self):
        return f"Tableau.from_rows({self.rows()!r})"

    def __len__(self):
        return len(self._entries)

    def row_word(self) -> tuple[int, ...]:
        """Entries row by row from row 0, left to right (the enumeration key)."""
        return tuple(self._entries[c] for c in self.shape.cells())

    def reading_word(self) -> tuple[int, ...]:
        """Rows from the last (shortest) to row 0, each left to right."""
        out = []
        for i in range(len(self.shape.outer) - 1, -1, -1):
            for j in range(self.shape.inner_row(i), self.shape.outer[i]):
                out.append(self._entries[(i, j)])
        return tuple(out)

    def weight(self) -> tuple[int, ...]:
        if not self._entries:
            return ()
        m = max(self._entries.values())
        w = [0] * m
        for v in self._entries.values():
            w[v - 1] += 1
        return tuple(w)

    def is_semistandard(self) -> bool:
        e = self._entries
        for (i, j), v in e.items():
            if v < 1:
                return False
            if (i, j + 1) in e and e[(i, j + 1)] < v:
                return False
            if (i + 1, j) in e and e[(i + 1, j)] <= v:
                return False
        return True

    def is_standard(self) -> bool:
        return sorted(self._entries.values()) == list(range(1, len(self._entries) + 1)) and self.is_semistandard()

    def position(self, value: int) -> Cell:
        for c, v in self._entries.items():
            if v == value:
                return c
        raise KeyError(value)

    def relabel(self, f: Callable[[int], int]) -> "Tableau":
        return Tableau(self.shape, {c: f(v) for c, v in self._entries.items()})


# ----------------------------------------------------------------- enumeration

def ssyt_enumerate(shape: SkewShape, max_entry: int) -> Iterator[Tableau]:
    """Every SSYT of ``shape`` with entries in ``[1, max_entry]``.

    Yielded in lexicographic order of :meth:`Tableau.row_word`.
    """
    cells = shape.cells()
    filling: dict[Cell, int] = {}

    def rec(k):
        if k == len(cells):
            yield Tableau(shape, filling)
            return
        i, j = cells[k]
        lo = 1
        if (i, j - 1) in filling:
            lo = filling[(i, j - 1)]
        if (i - 1, j) in filling:
            lo = max(lo, filling[(i - 1, j)] + 1)
        for v in range(lo, max_entry + 1):
            filling[(i, j)] = v
            yield from rec(k + 1)
        filling.pop((i, j), None)

    yield from rec(0)


@lru_cache(maxsize=4096)
def _syt_cached(shape: SkewShape) -> tuple[Tableau, ...]:
    cells = set(shape.cells())
    n = len(cells)
    placed: dict[Cell, int] = {}
    out = []

    def ready(c):
        i, j = c
        return ((i - 1, j) not in cells or (i - 1, j) in placed) and (
            (i, j - 1) not in cells or (i, j - 1) in placed
        )

    def rec(v):
        if v > n:
            out.append(Tableau(shape, placed))
            return
        for c in sorted(cells):
            if c not in placed and ready(c):
                placed[c] = v
                rec(v + 1)
                del placed[c]

    rec(1)
    out.sort(key=Tableau.row_word)
    return tuple(out)


def syt_enumerate(shape: SkewShape | Sequence[int]) -> tuple[Tableau, ...]:
    """All standard fillings, sorted by row word."""
    if not isinstance(shape, SkewShape):
        shape = SkewShape(tuple(shape))
    return _syt_cached(shape)


def row_tableau(la: Sequence[int]) -> Tableau:
    """``R_la``: row ``i`` holds the next ``la[i]`` consecutive integers."""
    rows, nxt = [], 1
    for p in la:
        rows.append(list(range(nxt, nxt + p)))
        nxt += p
    return Tableau.from_rows(rows)


def column_tableau(n: int) -> Tableau:
    return Tableau.from_rows([[i] for i in range(1, n + 1)])


def descent_set(t: Tableau) -> frozenset[int]:
    """``i`` is a descent when ``i + 1`` lies in a strictly lower row than ``i``."""
    row = {v: c[0] for c, v in t.items()}
    return frozenset(i for i in range(1, len(row)) if row[i + 1] > row[i])


# ---------------------------------------------------------------- jeu de taquin

def inner_corners(shape: SkewShape) -> list[Cell]:
    inner = shape.inner
    out = []
    for i, p in enumerate(inner):
        nxt = inner[i + 1] if i + 1 < len(inner) else 0
        if p > nxt:
            out.append((i, p - 1))
    return out


def _slide_into(entries: dict[Cell, int], hole: Cell) -> Cell:
    """Forward slide of ``entries`` into ``hole`` in place; returns the vacated cell."""
    i, j = hole
    while True:
        right, below = (i, j + 1), (i + 1, j)
        r, b = entries.get(right), entries.get(below)
        if r is None and b is None:
            return (i, j)
        if b is not None and (r is None or b <= r):
            entries[(i, j)] = entries.pop(below)
            i, j = below
        else:
            entries[(i, j)] = entries.pop(right)
            i, j = right


def slide(t: Tableau, corner: Cell) -> Tableau:
    """One forward jeu de taquin slide into the inner corner ``corner``."""
    if corner not in inner_corners(t.shape):
        raise ShapeMismatch(f"{corner} is not an inner corner of {t.shape}")
    entries = t.entries
    _slide_into(entries, corner)
    inner = list(t.shape.inner)
    inner[corner[0]] -= 1
    return Tableau.from_cells(entries, inner)


def jdt_rectify(t: Tableau, choose: Callable[[list[Cell]], Cell] | None = None) -> Tableau:
    """Rectify by forward slides; ``choose`` picks among the inner corners."""
    while t.shape.inner:
        corners = inner_corners(t.shape)
        corner = choose(corners) if choose else corners[-1]
        t = slide(t, corner)
    return t


def knuth_equivalent(a: Tableau, b: Tableau) -> bool:
    return jdt_rectify(a) == jdt_rectify(b)


def lr_coefficient(la: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """``c^{nu/la}_mu``: SYT of shape ``nu/la`` rectifying to the row tableau of ``mu``."""
    la, mu, nu = tuple(la), tuple(mu), tuple(nu)
    if sum(nu) != sum(la) + sum(mu) or not contains(nu, la):
        raise ShapeMismatch(f"bad shapes for c^({nu}/{la})_{mu}")
    target = row_tableau(mu)
    return sum(1 for t in syt_enumerate(SkewShape(nu, la)) if jdt_rectify(t) == target)


def tableau_switch(t: Tableau, s: Tableau) -> tuple[Tableau, Tableau]:
    """Switch a standard ``t`` of shape ``mu/la`` past a standard ``s`` of ``nu/mu``.

    The cells of ``t`` are vacated from its largest entry downward; each
    time ``s`` slides into the vacated cell and the ``t`` entry takes the
    cell ``s`` leaves behind. Returns ``(s_out, t_out)`` with ``s_out`` of
    shape ``sigma/la`` and ``t_out`` of shape ``nu/sigma``.
    """
    if t.shape.outer != s.shape.inner:
        raise ShapeMismatch(f"{t.shape} and {s.shape} do not nest")
    s_cells = s.entries
    t_cells = t.entries
    for v in sorted(t_cells.values(), reverse=True):
        hole = next(c for c, x in t_cells.items() if x == v)
        del t_cells[hole]
        end = _slide_into(s_cells, hole)
        t_cells[end] = v
    s_out = Tableau.from_cells(s_cells, t.shape.inner)
    t_out = Tableau.from_cells(t_cells, s_out.shape.outer)
    return s_out, t_out


# ---------------------------------------------------------------------- words

def rsk(word: Sequence[int]) -> tuple[Tableau, Tableau]:
    """Row insertion; returns the insertion and recording tableaux."""
    p_rows: list[list[int]] = []
    q_rows: list[list[int]] = []
    for step, x in enumerate(word, start=1):
        r = 0
        while True:
            if r == len(p_rows):
                p_rows.append([x])
                q_rows.append([step])
                break
            row = p_rows[r]
            k = next((idx for idx, y in enumerate(row) if y > x), None)
            if k is None:
                row.append(x)
                q_rows[r].append(step)
                break
            row[k], x = x, row[k]
            r += 1
    return Tableau.from_rows(p_rows), Tableau.from_rows(q_rows)


def standardize(word: Sequence[int]) -> tuple[int, ...]:
    """Rank of ``(w_i, i)`` among all such pairs, lexicographically."""
    order = sorted(range(len(word)), key=lambda i: (word[i], i))
    out = [0] * len(word)
    for rank, i in enumerate(order, start=1):
        out[i] = rank
    return tuple(out)


def word_descents(word: Sequence[int]) -> frozenset[int]:
    """1-based positions ``i`` with ``w_i > w_{i+1}``."""
    return frozenset(i + 1 for i in range(len(word) - 1) if word[i] > word[i + 1])


def inverse_descents(perm: Sequence[int]) -> frozenset[int]:
    """Letters ``i`` such that ``i + 1`` occurs to the left of ``i``."""
    pos = {v: p for p, v in enumerate(perm)}
    return frozenset(i for i in range(1, len(perm)) if pos[i + 1] < pos[i])


def cocharge(t: Tableau) -> int:
    """Cocharge of a standard tableau via its reading word.

    ``1`` gets index 0; ``i + 1`` gets the index of ``i`` plus one when it
    stands to the left of ``i`` in the reading word.
    """
    if not t.is_standard():
        raise ShapeMismatch("cocharge is defined here for standard tableaux")
    w = t.reading_word()
    pos = {v: p for p, v in enumerate(w)}
    idx = total = 0
    for i in range(1, len(w)):
        if pos[i + 1] < pos[i]:
            idx += 1
        total += idx
    return total


# -------------------------------------------------------------------- kostka

@lru_cache(maxsize=None)
def _kostka(la: Partition, mu: tuple[int, ...]) -> int:
    if not mu:
        return 1 if not la else 0
    last = mu[-1]
    total = 0
    # remove a horizontal strip of size `last` from la
    for inner in _horizontal_strip_inners(la, last):
        total += _kostka(inner, mu[:-1])
    return total


def _horizontal_strip_inners(la: Partition, k: int):
    n = len(la)

    def rec(i, remaining, acc):
        if i == n:
            if remaining == 0:
                yield tuple(p for p in acc if p)
            return
        lo = la[i + 1] if i + 1 < n else 0
        for keep in range(la[i], lo - 1, -1):
            take = la[i] - keep
            if take > remaining:
                break
            yield from rec(i + 1, remaining - take, acc + [keep])

    yield from rec(0, k, [])


def kostka(la: Sequence[int], mu: Sequence[int]) -> int:
    """Number of SSYT of shape ``la`` and weight ``mu`` (a partition or composition)."""
    la, mu = tuple(la), tuple(m for m in mu)
    if sum(la) != sum(mu):
        raise SizeMismatch(f"|{la}| != |{mu}|")
    return _kostka(la, tuple(m for m in mu if m))


def hook_length_count(la: Sequence[int]) -> int:
    """``f^la`` by the hook length formula."""
    from math import factorial

    n = sum(la)
    conj = [sum(1 for p in la if p > j) for j in range(la[0])] if la else []
    prod = 1
    for i, p in enumerate(la):
        for j in range(p):
            prod *= (p - j - 1) + (conj[j] - i - 1) + 1
    return factorial(n) // prod
