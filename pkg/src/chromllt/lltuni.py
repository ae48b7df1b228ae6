"""Unicellular LLT polynomials of Dyck diagrams.

``LLT = sum over all colorings k of q^asc(k) x^k``. Colorings are also read
as words: position ``p`` of a word carries the color of vertex ``n + 1 - p``,
so ``asc`` of the coloring is the inversion count :func:`inv_count` of the word.
"""

from __future__ import annotations

from collections import Counter
from itertools import permutations
from typing import Iterable, Optional, Sequence, Union

import numpy as np

from .combinat.partitions import (
    Partition,
    descents_to_composition,
    hook,
    partitions_of,
)
from .combinat.rimhooks import shuffle_words_Dk
from .combinat.tableaux import (
    SkewShape,
    Tableau,
    cocharge,
    descent_set,
    jdt_rectify,
    row_tableau,
    syt_enumerate,
    tableau_switch,
    word_descents,
)
from .errors import BruteForceBound, LengthMismatch, RangeError
from .qpoly import ZERO, QPoly
from .report import RelationReport
from .symfunc import (
    QuasiExpansion,
    SymExpansion,
    change_basis,
    plethysm_q_shift,
    quasi_to_monomial,
    quasi_to_schur_elw,
)
from .unigraphs import (
    DyckDiagram,
    UnitIntervalGraph,
    complete,
    complete_deleted,
    lollipop,
    melting_lollipop,
    path,
)

WORD_BOUND = 7
PERM_BOUND = 9

DiagramLike = Union[DyckDiagram, UnitIntervalGraph, Sequence[int]]


def as_diagram(d: DiagramLike) -> DyckDiagram:
    if isinstance(d, DyckDiagram):
        return d
    if isinstance(d, UnitIntervalGraph):
        return d.dyck
    return DyckDiagram(tuple(d))


def _inversion_pairs(d: DyckDiagram) -> list[tuple[int, int]]:
    """0-based word positions ``(p, p')``, ``p < p'``, whose vertices are adjacent."""
    n = d.n
    return [(n - j, n - i) for i, j in d.cells()]


def inv_count(word: Sequence[int], d: DiagramLike) -> int:
    """Pairs ``p < p'`` with ``w_p > w_p'`` whose vertices ``n+1-p'``, ``n+1-p`` are adjacent."""
    d = as_diagram(d)
    if len(word) != d.n:
        raise LengthMismatch(f"word of length {len(word)} on a diagram with {d.n} rows")
    return sum(1 for p, pp in _inversion_pairs(d) if word[p] > word[pp])


def _multiset_perms(content: Sequence[int]):
    """Words with ``content[c]`` copies of letter ``c + 1``, in lex order."""
    left = list(content)
    n = sum(left)
    word = []

    def rec():
        if len(word) == n:
            yield tuple(word)
            return
        for c, k in enumerate(left):
            if k:
                left[c] -= 1
                word.append(c + 1)
                yield from rec()
                word.pop()
                left[c] += 1

    yield from rec()


def llt_bruteforce_words(d: DiagramLike, bound: int = WORD_BOUND) -> SymExpansion:
    """Monomial fingerprint: for each ``la |- n``, sum ``q^inv`` over words of content ``la``."""
    d = as_diagram(d)
    n = d.n
    if n > bound:
        raise BruteForceBound(f"{n} letters exceeds the word bound {bound}")
    if n == 0:
        return SymExpansion.one()
    pairs = _inversion_pairs(d)
    out = {}
    for la in partitions_of(n):
        counts = Counter(
            sum(1 for p, pp in pairs if w[p] > w[pp]) for w in _multiset_perms(la)
        )
        out[la] = QPoly([counts.get(i, 0) for i in range(max(counts) + 1)])
    return SymExpansion(n, "m", out)


def llt_via_F(d: DiagramLike, bound: int = PERM_BOUND) -> QuasiExpansion:
    """``sum over permutations s of q^inv(s) F_{co(iDes(s))}``, vectorised over all of ``S_n``."""
    d = as_diagram(d)
    n = d.n
    if n > bound:
        raise BruteForceBound(f"{n} letters exceeds the permutation bound {bound}")
    if n == 0:
        return QuasiExpansion(0, {(): 1})
    perms = np.array(list(permutations(range(1, n + 1))), dtype=np.int8)
    inv = np.zeros(len(perms), dtype=np.int64)
    for p, pp in _inversion_pairs(d):
        inv += perms[:, p] > perms[:, pp]
    pos = np.argsort(perms, axis=1)  # pos[:, v-1] = position of letter v
    mask = np.zeros(len(perms), dtype=np.int64)
    for i in range(1, n):
        mask |= (pos[:, i] < pos[:, i - 1]).astype(np.int64) << (i - 1)
    top = int(inv.max()) + 1
    keys, counts = np.unique(mask * top + inv, return_counts=True)
    acc: dict[int, dict[int, int]] = {}
    for key, c in zip(keys.tolist(), counts.tolist()):
        m, e = divmod(key, top)
        acc.setdefault(m, {})[e] = c
    out = {}
    for m, poly in acc.items():
        des = [i for i in range(1, n) if m >> (i - 1) & 1]
        out[descents_to_composition(des, n)] = QPoly([poly.get(i, 0) for i in range(top)])
    return QuasiExpansion(n, out)


def llt_schur(d: DiagramLike, route: str = "elw") -> SymExpansion:
    """Schur expansion from the F expansion, by ELW extraction or through monomials."""
    f = llt_via_F(d)
    if route == "elw":
        return quasi_to_schur_elw(f)
    if route == "m":
        return change_basis(quasi_to_monomial(f), "s")
    raise ValueError(f"unknown route {route!r}")


# -------------------------------------------------------------- wt statistic

def wt(t: Tableau, d: DiagramLike) -> int:
    """Sum of ``a_i`` over the descents ``i`` of the standard tableau ``t``."""
    area = as_diagram(d).area
    return sum(area[i - 1] for i in descent_set(t))


def schur_via_wt(d: DiagramLike) -> SymExpansion:
    """``sum_la (sum over SYT(la) of q^wt) s_la``.

    Equal to the LLT polynomial on the families listed in
    :func:`proved_family`; elsewhere it is only a candidate.
    """
    d = as_diagram(d)
    n = d.n
    out = {}
    for la in partitions_of(n):
        c = Counter(wt(t, d) for t in syt_enumerate(la))
        out[la] = QPoly([c.get(i, 0) for i in range(max(c) + 1)])
    return SymExpansion(n, "s", out)


def proved_family(d: DiagramLike) -> Optional[str]:
    """Label of a family on which the wt expansion is known to hold, or ``None``."""
    area = as_diagram(d).area
    n = len(area)
    if n == 0:
        return None
    cands = [(f"complete:{n}", complete(n)), (f"path:{n}", path(n))]
    cands += [(f"kdel:{n},{k}", complete_deleted(n, k)) for k in range(1, n)]
    for m in range(2, n + 1):
        cands.append((f"lollipop:{m},{n - m}", lollipop(m, n - m)))
        cands += [(f"melting:{m},{n - m},{k}", melting_lollipop(m, n - m, k)) for k in range(1, m)]
    for label, g in cands:
        if g.area == area:
            return label
    return None


def llt_complete_cocharge(n: int) -> SymExpansion:
    """``sum_la (sum over SYT(la) of q^cocharge) s_la``."""
    out = {}
    for la in partitions_of(n):
        c = Counter(cocharge(t) for t in syt_enumerate(la))
        out[la] = QPoly([c.get(i, 0) for i in range(max(c) + 1)])
    return SymExpansion(n, "s", out)


# --------------------------------------------------------- hook coefficients

def _backward_counts(d: DyckDiagram) -> list[int]:
    """``b[v]`` = number of neighbours ``u < v`` of vertex ``v`` (1-based)."""
    b = [0] * (d.n + 1)
    for _, j in d.cells():
        b[j] += 1
    return b


def hook_coefficient(d: DiagramLike, k: int, route: str = "shuffle", fast: bool = True) -> QPoly:
    """Coefficient of ``s_{(k, 1^{n-k})}``.

    ``shuffle``: sum of ``q^inv`` over the words of :func:`shuffle_words_Dk`.
    With ``fast``, each word's inversions are counted as the backward degree
    of the vertex at every descent position (each descent letter exceeds
    everything after it in these words).
    ``wt``: sum over SYT of the hook shape of ``q^wt``.
    ``elw``: the Schur coefficient extracted from the F expansion.
    """
    d = as_diagram(d)
    n = d.n
    if not 1 <= k <= n:
        raise RangeError(f"need 1 <= k <= n, got k={k}, n={n}")
    if route == "shuffle":
        out = ZERO
        if fast:
            b = _backward_counts(d)
            for u in shuffle_words_Dk(n, k):
                out = out + QPoly.monomial(sum(b[n + 1 - p] for p in word_descents(u)))
        else:
            for u in shuffle_words_Dk(n, k):
                out = out + QPoly.monomial(inv_count(u, d))
        return out
    if route == "wt":
        out = ZERO
        for t in syt_enumerate(hook(k, n)):
            out = out + QPoly.monomial(wt(t, d))
        return out
    if route == "elw":
        f = llt_via_F(d)
        if fast:
            return f[hook(k, n)]
        return quasi_to_schur_elw(f)[hook(k, n)]
    raise ValueError(f"unknown route {route!r}")


# ------------------------------------------------------------ plethysm bridge

def plethysm_bridge_check(g: UnitIntervalGraph, bound: int = 8) -> RelationReport:
    """``X_G = (q - 1)^(-n) LLT_G[(q - 1)X]`` with each side computed independently."""
    from .chromaticq import chromatic_bruteforce

    x = change_basis(chromatic_bruteforce(g, bound=bound), "e")
    if g.n == 0:
        rhs = SymExpansion.one()
    else:
        rhs = plethysm_q_shift(quasi_to_monomial(llt_via_F(g.dyck)))
    ok = x == rhs
    witness = None
    if not ok:
        la, c = (x - rhs).items()[0]
        witness = {"partition": list(la), "difference": c.to_json()}
    return RelationReport("plethysm-bridge", {"mseq": list(g.mseq), "n": g.n}, True, ok, witness)


# -------------------------------------------------------- product bijection

def _split(t: Tableau, n: int) -> tuple[Tableau, Tableau]:
    low = {c: v for c, v in t.items() if v <= n}
    high = {c: v - n for c, v in t.items() if v > n}
    lower = Tableau.from_cells(low) if low else Tableau.from_rows([])
    inner = lower.shape.outer
    return lower, Tableau.from_cells(high, inner) if high else Tableau(SkewShape(inner, inner), {})


def product_phi(r: Tableau, p: Tableau, q: Tableau) -> Tableau:
    """``(R, P, Q) -> T``: switch ``Q`` past ``R`` and stack the moved ``Q`` above ``P``.

    ``R`` is standard of shape ``nu/mu`` rectifying to a row tableau of
    shape ``la``, ``P`` is standard of shape ``la``, ``Q`` standard of ``mu``.
    """
    n = len(p)
    r_out, q_r = tableau_switch(q, r)
    if r_out != row_tableau(p.shape.outer):
        raise ValueError("R does not rectify to the row tableau of P's shape")
    cells = p.entries
    cells.update({c: v + n for c, v in q_r.items()})
    return Tableau.from_cells(cells)


def product_phi_inverse(t: Tableau, n: int) -> tuple[Tableau, Tableau, Tableau]:
    """``T -> (R, P, Q)`` where ``P`` holds the entries ``<= n``."""
    p, upper = _split(t, n)
    la = p.shape.outer
    rect, r = tableau_switch(row_tableau(la), upper)
    return r, p, rect


def phi_domain(nu: Partition, n: int) -> list[tuple[Tableau, Tableau, Tableau]]:
    """All triples ``(R, P, Q)`` over ``la |- n``, ``mu |- |nu| - n`` with ``R`` in ``C^{nu/mu}_la``."""
    m = sum(nu) - n
    out = []
    for mu in partitions_of(m):
        if len(mu) > len(nu) or any(a > b for a, b in zip(mu, nu)):
            continue
        skews = syt_enumerate(SkewShape(tuple(nu), mu)) if m < sum(nu) else ()
        by_rect: dict[Partition, list[Tableau]] = {}
        for r in skews:
            rect = jdt_rectify(r)
            if rect == row_tableau(rect.shape.outer):
                by_rect.setdefault(rect.shape.outer, []).append(r)
        for la, rs in sorted(by_rect.items(), reverse=True):
            for r in rs:
                for p in syt_enumerate(la):
                    for q in syt_enumerate(mu) if m else (Tableau.from_rows([]),):
                        out.append((r, p, q))
    return out


def check_product_bijection(nu: Partition, n: int,
                            areas: Iterable[tuple[Sequence[int], Sequence[int]]] = ()) -> RelationReport:
    """Exhaustively test that ``phi`` is a descent-preserving bijection onto ``SYT(nu)``.

    ``areas`` are optional ``(a1, a2)`` pairs with ``len(a1) = n``; the weight
    identity ``wt_1(P) + wt_2(Q) = wt(T)`` is checked for each.
    """
    nu = tuple(nu)
    triples = phi_domain(nu, n)
    targets = set(syt_enumerate(nu))
    images = {}
    problems = []
    areas = [(tuple(a1), tuple(a2)) for a1, a2 in areas]
    for r, p, q in triples:
        t = product_phi(r, p, q)
        key = (r, p, q)
        if t in images:
            problems.append({"kind": "collision", "tableau": t.rows()})
        images[t] = key
        if product_phi_inverse(t, n) != key:
            problems.append({"kind": "inverse", "tableau": t.rows()})
        dt = descent_set(t)
        if {i for i in dt if i < n} != set(descent_set(p)) or {
            i - n for i in dt if i > n
        } != set(descent_set(q)):
            problems.append({"kind": "descents", "tableau": t.rows()})
        for a1, a2 in areas:
            if wt(p, a1) + wt(q, a2) != wt(t, a1 + a2):
                problems.append({"kind": "weight", "tableau": t.rows(), "areas": [a1, a2]})
    if set(images) != targets:
        problems.append({"kind": "not-onto", "missing": len(targets - set(images))})
    params = {"nu": list(nu), "n": n, "domain": len(triples), "codomain": len(targets)}
    return RelationReport("product-bijection", params, True, not problems,
                          problems[0] if problems else None)
