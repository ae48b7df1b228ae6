"""Chromatic quasisymmetric functions: a coloring oracle and closed e-expansions.

``X_G = sum over proper colorings k of q^asc(k) x^k`` where ``asc`` counts
edges ``i < j`` with ``k(i) < k(j)``. The oracle only needs the coefficients
of ``x^la`` for ``la |- n`` (the monomial fingerprint), so it enumerates
colorings of fixed content one partition at a time.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from itertools import combinations
from typing import Iterable, Sequence, Union

from .combinat.partitions import Partition, as_partition, partitions_of
from .errors import BruteForceBound, NotATriangle, RangeError
from .qpoly import ONE, ZERO, QPoly, q_factorial, q_int
from .report import RelationReport
from .symfunc import SymExpansion, change_basis, multiply
from .unigraphs import UnitIntervalGraph

DEFAULT_BOUND = 8

GraphLike = Union[UnitIntervalGraph, tuple[int, Iterable[tuple[int, int]]]]


def _graph_data(g: GraphLike) -> tuple[int, list[list[int]]]:
    """``(n, back)`` where ``back[v]`` lists the neighbours ``u < v`` of ``v``."""
    if isinstance(g, UnitIntervalGraph):
        n, es = g.n, g.edges
    else:
        n, es = g[0], list(g[1])
    back = [[] for _ in range(n + 1)]
    for i, j in es:
        i, j = min(i, j), max(i, j)
        back[j].append(i)
    return n, back


def count_colorings(n: int, back: list[list[int]], content: Sequence[int], proper: bool = True) -> list[int]:
    """Coefficient list (by asc) of ``x^content`` over colorings of vertices ``1..n``.

    ``content[c]`` is how many vertices get color ``c + 1``. Vertices are
    colored in order, so ``asc`` and properness are settled incrementally.
    """
    counts = [0] * (sum(len(b) for b in back) + 1)
    left = list(content)
    ncol = len(left)
    col = [0] * (n + 1)

    def rec(v: int, asc: int):
        if v > n:
            counts[asc] += 1
            return
        nbrs = back[v]
        for c in range(ncol):
            if not left[c]:
                continue
            gain = 0
            ok = True
            for u in nbrs:
                cu = col[u]
                if cu == c:
                    if proper:
                        ok = False
                        break
                elif cu < c:
                    gain += 1
            if not ok:
                continue
            left[c] -= 1
            col[v] = c
            rec(v + 1, asc + gain)
            left[c] += 1

    rec(1, 0)
    return counts


def _fingerprint_job(args):
    n, back, la, proper = args
    return la, count_colorings(n, back, la, proper)


def monomial_fingerprint(n: int, back, proper: bool, workers: int = 1) -> SymExpansion:
    jobs = [(n, back, la, proper) for la in partitions_of(n)]
    if workers > 1 and n >= 6:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            results = list(ex.map(_fingerprint_job, jobs))
    else:
        results = [_fingerprint_job(j) for j in jobs]
    return SymExpansion(n, "m", {la: QPoly(c) for la, c in results})


def weak_compositions(n: int, parts: int):
    if parts == 0:
        if n == 0:
            yield ()
        return
    for first in range(n, -1, -1):
        for rest in weak_compositions(n - first, parts - 1):
            yield (first,) + rest


def quasimonomial_table(g: GraphLike, proper: bool = True) -> dict[tuple[int, ...], QPoly]:
    """Coefficient of ``x_1^c_1 ... x_n^c_n`` for every weak composition ``c`` of ``n``."""
    n, back = _graph_data(g)
    table = {}
    for c in weak_compositions(n, n):
        p = QPoly(count_colorings(n, back, c, proper))
        if p:
            table[c] = p
    return table


def chromatic_bruteforce(g: GraphLike, bound: int = DEFAULT_BOUND, quasi: bool = False, workers: int = 1):
    """``X_G`` in the m basis by coloring enumeration.

    With ``quasi=True`` returns ``(X_G, table)`` where ``table`` is the full
    quasimonomial table from :func:`quasimonomial_table`.
    """
    n, back = _graph_data(g)
    if n > bound:
        raise BruteForceBound(f"{n} vertices exceeds the brute-force bound {bound}")
    if n == 0:
        x = SymExpansion.one()
    else:
        x = monomial_fingerprint(n, back, proper=True, workers=workers)
    if quasi:
        return x, quasimonomial_table(g)
    return x


def is_symmetric_table(table: dict[tuple[int, ...], QPoly]) -> bool:
    seen: dict[Partition, QPoly] = {}
    n = sum(next(iter(table), ()))
    for c in weak_compositions(n, n) if table else ():
        key = as_partition(c)
        v = table.get(c, ZERO)
        if seen.setdefault(key, v) != v:
            return False
    return True


# ----------------------------------------------------------- closed forms

def _e(parts: Iterable[int], coeff=ONE) -> SymExpansion:
    return SymExpansion.basis_element("e", as_partition([p for p in parts if p]), coeff)


def _shift_e(f: SymExpansion, k: int) -> SymExpansion:
    """``f * e_k`` for ``f`` in the e basis."""
    return SymExpansion(
        f.degree + k, "e", {as_partition(la + (k,)): c for la, c in f.items()}
    ) if k else f


def x_complete(m: int) -> SymExpansion:
    if m < 1:
        raise RangeError(f"complete graph needs m >= 1, got {m}")
    return _e((m,), q_factorial(m))


def _compositions_min2(total: int):
    """Compositions of ``total`` with all parts >= 2."""
    if total == 0:
        yield ()
        return
    for first in range(2, total + 1):
        for rest in _compositions_min2(total - first):
            yield (first,) + rest


def x_path(n: int) -> SymExpansion:
    """Path graph on ``n`` vertices. ``n = 0`` gives the empty product 1."""
    if n < 0:
        raise RangeError(f"path needs n >= 0, got {n}")
    if n == 0:
        return SymExpansion.one()
    out = SymExpansion(n, "e")
    for ks in _compositions_min2(n + 1):
        coeff = QPoly.monomial(len(ks) - 1)
        for k in ks:
            coeff = coeff * q_int(k - 1)
        out = out + _e((ks[0] - 1,) + ks[1:], coeff)
    return out


def _lollipop_bracket(m: int, n: int) -> SymExpansion:
    """``[m+n] e_{m+n} + sum_{i<n} q [m+i-1] X_{P_{n-i}} e_{m+i}``."""
    out = _e((m + n,), q_int(m + n))
    for i in range(n):
        out = out + _shift_e(x_path(n - i), m + i).scale(q_int(m + i - 1).shift(1))
    return out


def _x_lollipop(m: int, n: int) -> SymExpansion:
    if m == 0:
        return x_path(n)
    return _lollipop_bracket(m, n).scale(q_factorial(m - 1))


def x_lollipop(m: int, n: int) -> SymExpansion:
    """Lollipop ``L_{m,n}``: a path on ``n + 1`` vertices glued to ``K_m``.

    ``m = 0`` is accepted and returns ``X_{P_n}``.
    """
    if n < 0 or m == 1 or m < 0 or (m == 0 and n == 0):
        raise RangeError(f"lollipop needs m >= 2 (or m = 0) and n >= 0, got m={m}, n={n}")
    return _x_lollipop(m, n)


def x_join_complete_complete(r: int, n: int) -> SymExpansion:
    """``K_r`` glued at one vertex to ``K_{n-r+1}``; ``n`` vertices in all."""
    if not 1 <= r <= n - 1:
        raise RangeError(f"need 1 <= r <= n-1, got r={r}, n={n}")
    base = q_factorial(n - r) * q_factorial(r - 1)
    out = SymExpansion(n, "e")
    for i in range(min(n - r, r - 1) + 1):
        out = out + _e((n - i, i), base * q_int(n - 2 * i) * QPoly.monomial(i))
    return out


def x_join_complete_lollipop(r: int, m: int, n: int) -> SymExpansion:
    """``K_r`` glued to the path end of ``L_{m,n}``; ``d = n + m + r - 1`` vertices."""
    if m < 3 or not 1 <= r <= m or n < 0:
        raise RangeError(f"need m >= 3, 1 <= r <= m, n >= 0; got r={r}, m={m}, n={n}")
    d = n + m + r - 1
    out = SymExpansion(d, "e")
    fr = q_factorial(r - 1)
    for i in range(r):
        out = out + _e((d - i, i), QPoly.monomial(i) * fr * q_int(d - 2 * i))
    for j in range(n):
        out = out + _shift_e(_x_lollipop(r, j) if r > 1 else x_path(j + 1), n + m - j - 1).scale(
            q_int(n + m - j - 2).shift(1)
        )
    return out.scale(q_factorial(m - 1))


def x_melting_lollipop(m: int, n: int, k: int) -> SymExpansion:
    if m < 2 or n < 0 or not 0 <= k <= m - 1:
        raise RangeError(f"need m >= 2, n >= 0, 0 <= k <= m-1; got {m}, {n}, {k}")
    f = q_factorial(m - 2)
    out = _lollipop_bracket(m, n).scale(q_int(m - k - 1) * f)
    if k:
        tail = _shift_e(x_path(n + 1), m - 1).scale(QPoly.monomial(m - k - 1) * q_int(k) * f)
        out = out + tail
    return out


# -------------------------------------------------------- triple deletion

def _is_triangle(e1, e2, e3) -> bool:
    es = [frozenset(e) for e in (e1, e2, e3)]
    if any(len(e) != 2 for e in es) or len(set(es)) != 3:
        return False
    verts = es[0] | es[1] | es[2]
    return len(verts) == 3


def verify_triple_deletion(n: int, edges: Iterable[tuple[int, int]], e1, e2, e3,
                           bound: int = DEFAULT_BOUND) -> RelationReport:
    """``X_G = X_{G-e1} + X_{G-e2} - X_{G-e1-e2}`` at ``q = 1`` for a triangle ``e1 e2 e3``."""
    es = {frozenset(e) for e in edges}
    tri = [frozenset(e) for e in (e1, e2, e3)]
    if not _is_triangle(e1, e2, e3) or not all(t in es for t in tri):
        raise NotATriangle(f"{e1}, {e2}, {e3} do not form a triangle of the graph")

    def x(drop):
        kept = [tuple(sorted(e)) for e in es if e not in drop]
        return chromatic_bruteforce((n, kept), bound=bound).at_q1()

    lhs = x(())
    rhs = x((tri[0],)) + x((tri[1],)) - x((tri[0], tri[1]))
    ok = lhs == rhs
    witness = None
    if not ok:
        diff = lhs - rhs
        la, c = diff.items()[0]
        witness = {"partition": list(la), "difference": c.to_json()}
    params = {"n": n, "edges": sorted(sorted(e) for e in es), "triangle": [sorted(t) for t in tri]}
    return RelationReport("triple-deletion", params, True, ok, witness)


def triangles(n: int, edges: Iterable[tuple[int, int]]) -> list[tuple[tuple[int, int], ...]]:
    es = {tuple(sorted(e)) for e in edges}
    out = []
    for a, b, c in combinations(range(1, n + 1), 3):
        if (a, b) in es and (b, c) in es and (a, c) in es:
            out.append(((a, b), (b, c), (a, c)))
    return out


def closed_form_for(label: str):
    """Closed-form e-expansion for a family label like ``lollipop:3,2``, else ``None``."""
    name, _, args = label.partition(":")
    nums = [int(x) for x in args.split(",")] if args else []
    table = {
        "complete": x_complete,
        "path": x_path,
        "lollipop": x_lollipop,
        "melting": x_melting_lollipop,
    }
    fn = table.get(name)
    return fn(*nums) if fn else None


def x_product(*fs: SymExpansion) -> SymExpansion:
    out = SymExpansion.one()
    for f in fs:
        out = multiply(out, change_basis(f, "e")) if out.degree else change_basis(f, "e")
    return out
