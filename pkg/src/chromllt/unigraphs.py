"""Natural unit interval graphs and their three encodings.

A graph on vertices ``1..n`` is stored by its m-sequence ``(m_1, ..., m_{n-1})``
with ``i <= m_i <= n`` nondecreasing; ``{i, j}`` (``i < j``) is an edge iff
``j <= m_i``. The area sequence ``a_i = m_i - i`` (with ``a_n = 0``) counts the
forward neighbours of each vertex.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import InvalidArea, InvalidMSeq, NotUnitInterval, RangeError

Edge = tuple[int, int]


def validate_mseq(mseq: Sequence[int], n: int) -> tuple[int, ...]:
    mseq = tuple(int(x) for x in mseq)
    if n < 0:
        raise InvalidMSeq(f"negative vertex count {n}")
    if len(mseq) != max(n - 1, 0):
        raise InvalidMSeq(f"need {max(n - 1, 0)} entries for {n} vertices, got {len(mseq)}")
    for i, m in enumerate(mseq, start=1):
        if not i <= m <= n:
            raise InvalidMSeq(f"m_{i} = {m} is outside [{i}, {n}]", i)
        if i > 1 and m < mseq[i - 2]:
            raise InvalidMSeq(f"m_{i} = {m} < m_{i - 1} = {mseq[i - 2]}", i)
    return mseq


def validate_area(area: Sequence[int]) -> tuple[int, ...]:
    """Check ``0 <= a_i <= n - i`` and ``a_{i+1} >= a_i - 1``; return a tuple."""
    area = tuple(int(x) for x in area)
    n = len(area)
    for i, a in enumerate(area, start=1):
        if not 0 <= a <= n - i:
            raise InvalidArea(f"a_{i} = {a} is outside [0, {n - i}]", i)
        if i > 1 and a < area[i - 2] - 1:
            raise InvalidArea(f"a_{i} = {a} < a_{i - 1} - 1 = {area[i - 2] - 1}", i)
    return area


@dataclass(frozen=True)
class UnitIntervalGraph:
    n: int
    mseq: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "mseq", validate_mseq(self.mseq, self.n))

    @classmethod
    def from_mseq(cls, mseq: Sequence[int], n: int | None = None) -> "UnitIntervalGraph":
        mseq = tuple(mseq)
        if n is None:
            n = len(mseq) + 1
        return cls(n, mseq)

    @classmethod
    def from_area(cls, area: Sequence[int]) -> "UnitIntervalGraph":
        area = validate_area(area)
        if area and area[-1] != 0:
            raise InvalidArea("last entry must be 0", len(area))
        return cls(len(area), tuple(a + i for i, a in enumerate(area[:-1], start=1)))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> "UnitIntervalGraph":
        """Recover the m-sequence, or raise :class:`NotUnitInterval`."""
        es = {tuple(sorted(e)) for e in edges}
        for i, j in es:
            if not 1 <= i < j <= n:
                raise NotUnitInterval(f"edge {(i, j)} is not on vertices 1..{n}")
        reach = [i for i in range(n + 1)]
        for i, j in es:
            reach[i] = max(reach[i], j)
        mseq = tuple(reach[1:n])
        if any(mseq[k] > mseq[k + 1] for k in range(len(mseq) - 1)):
            raise NotUnitInterval("forward reaches are not nondecreasing")
        g = cls(n, mseq)
        if set(g.edges) != es:
            raise NotUnitInterval("edge set is not an interval in the natural order")
        return g

    @property
    def area(self) -> tuple[int, ...]:
        if self.n == 0:
            return ()
        return tuple(m - i for i, m in enumerate(self.mseq, start=1)) + (0,)

    @property
    def dyck(self) -> "DyckDiagram":
        return DyckDiagram(self.area)

    @property
    def edges(self) -> tuple[Edge, ...]:
        return tuple((i, j) for i, m in enumerate(self.mseq, start=1) for j in range(i + 1, m + 1))

    @property
    def num_edges(self) -> int:
        return sum(self.area)

    def adjacency(self) -> list[list[bool]]:
        """``adj[u][v]`` on 1-based vertices; row and column 0 unused."""
        adj = [[False] * (self.n + 1) for _ in range(self.n + 1)]
        for i, j in self.edges:
            adj[i][j] = adj[j][i] = True
        return adj

    def __str__(self):
        return f"mseq:{','.join(map(str, self.mseq))}" if self.mseq else f"nuio({self.n})"


@dataclass(frozen=True)
class DyckDiagram:
    """Area-sequence view; row ``i`` holds the cells ``(i, j)`` for ``i < j <= i + a_i``."""

    area: tuple[int, ...]

    def __post_init__(self):
        area = validate_area(self.area)
        if area and area[-1] != 0:
            raise InvalidArea("last entry must be 0", len(area))
        object.__setattr__(self, "area", area)

    @property
    def n(self) -> int:
        return len(self.area)

    def cells(self) -> list[Edge]:
        return [(i, j) for i, a in enumerate(self.area, start=1) for j in range(i + 1, i + a + 1)]

    def graph(self) -> UnitIntervalGraph:
        return UnitIntervalGraph.from_area(self.area)


def from_mseq(mseq: Sequence[int]) -> UnitIntervalGraph:
    return UnitIntervalGraph.from_mseq(mseq)


def from_area(area: Sequence[int]) -> UnitIntervalGraph:
    return UnitIntervalGraph.from_area(area)


def to_area(g: UnitIntervalGraph) -> DyckDiagram:
    return g.dyck


def edges(g: UnitIntervalGraph) -> tuple[Edge, ...]:
    return g.edges


# -------------------------------------------------------------- families

def empty_graph() -> UnitIntervalGraph:
    return UnitIntervalGraph(0, ())


def edgeless(n: int) -> UnitIntervalGraph:
    return UnitIntervalGraph(n, tuple(range(1, n)))


def complete(n: int) -> UnitIntervalGraph:
    if n < 1:
        raise RangeError(f"complete graph needs n >= 1, got {n}")
    return UnitIntervalGraph(n, (n,) * (n - 1))


def path(n: int) -> UnitIntervalGraph:
    if n < 1:
        raise RangeError(f"path needs n >= 1, got {n}")
    return UnitIntervalGraph(n, tuple(range(2, n + 1)))


def lollipop(m: int, n: int) -> UnitIntervalGraph:
    """A path on ``n + 1`` vertices glued to ``K_m`` at its last vertex.

    ``m = 0`` is accepted as the degenerate case ``path(n)``.
    """
    if m == 0 and n >= 1:
        return path(n)
    if m < 2 or n < 0:
        raise RangeError(f"lollipop needs m >= 2 and n >= 0, got m={m}, n={n}")
    total = m + n
    return UnitIntervalGraph(total, tuple(i + 1 if i <= n else total for i in range(1, total)))


def melting_lollipop(m: int, n: int, k: int) -> UnitIntervalGraph:
    """``lollipop(m, n)`` with ``k`` edges removed from the junction vertex ``n + 1``."""
    if m < 2 or n < 0 or not 0 <= k <= m - 1:
        raise RangeError(f"melting lollipop needs m >= 2, n >= 0, 0 <= k <= m-1; got {m}, {n}, {k}")
    total = m + n
    mseq = []
    for i in range(1, total):
        if i <= n:
            mseq.append(i + 1)
        elif i == n + 1:
            mseq.append(total - k)
        else:
            mseq.append(total)
    return UnitIntervalGraph(total, tuple(mseq))


def complete_deleted(n: int, k: int) -> UnitIntervalGraph:
    """``K_n`` minus the edges ``{1, n-k+1}, ..., {1, n}``; area ``(n-k-1, n-2, ..., 1, 0)``."""
    if n < 1 or not 0 <= k <= n - 1:
        raise RangeError(f"need n >= 1 and 0 <= k <= n-1, got n={n}, k={k}")
    if n == 1:
        return complete(1)
    return UnitIntervalGraph(n, (n - k,) + (n,) * (n - 2))


def glue_sum(g: UnitIntervalGraph, h: UnitIntervalGraph) -> UnitIntervalGraph:
    """Identify the last vertex of ``g`` with the first vertex of ``h``."""
    if g.n == 0:
        return h
    if h.n == 0:
        return g
    shift = g.n - 1
    edge_set = list(g.edges) + [(i + shift, j + shift) for i, j in h.edges]
    return UnitIntervalGraph.from_edges(g.n + h.n - 1, edge_set)


def disjoint_union(g: UnitIntervalGraph, h: UnitIntervalGraph) -> UnitIntervalGraph:
    if g.n == 0:
        return h
    if h.n == 0:
        return g
    return UnitIntervalGraph.from_area(g.area + h.area)


def enumerate_nuio(n: int, prefix: Sequence[int] = ()) -> Iterator[UnitIntervalGraph]:
    """Every natural unit interval graph on ``n`` vertices, m-sequences in lex order.

    ``prefix`` restricts to m-sequences starting with it, so callers can split
    the enumeration across workers.
    """
    if n <= 1:
        if not prefix:
            yield UnitIntervalGraph(max(n, 0), ())
        return

    def rec(acc: list[int]):
        i = len(acc) + 1
        if i == n:
            yield UnitIntervalGraph(n, tuple(acc))
            return
        lo = max(i, acc[-1] if acc else 1)
        for m in range(lo, n + 1):
            acc.append(m)
            yield from rec(acc)
            acc.pop()

    prefix = list(prefix)
    try:
        validate_mseq(prefix + [n] * (n - 1 - len(prefix)), n)
    except InvalidMSeq:
        return
    yield from rec(prefix)


def family_graphs(max_n: int) -> Iterator[tuple[str, UnitIntervalGraph]]:
    """Labelled members of every named family with at most ``max_n`` vertices."""
    for n in range(1, max_n + 1):
        yield f"complete:{n}", complete(n)
        yield f"path:{n}", path(n)
        for k in range(1, n):
            yield f"kdel:{n},{k}", complete_deleted(n, k)
    for m in range(2, max_n + 1):
        for n in range(0, max_n - m + 1):
            yield f"lollipop:{m},{n}", lollipop(m, n)
            for k in range(1, m):
                yield f"melting:{m},{n},{k}", melting_lollipop(m, n, k)
