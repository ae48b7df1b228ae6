"""Checks of the local linear relations between unicellular LLT polynomials
and, in parallel, between chromatic quasisymmetric functions.

For an area sequence ``a`` and a row ``i`` put ``a^z`` for ``a`` with
``a_i`` lowered by ``z``. The relations tie together the polynomials of
``a^0, a^1, ...`` under conditions on ``a`` near row ``i``.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import Iterator, Sequence

from .chromaticq import chromatic_bruteforce
from .errors import InvalidArea, RangeError
from .lltuni import llt_via_F
from .qpoly import ONE, QPoly, q_int
from .report import RelationReport
from .symfunc import SymExpansion, quasi_to_monomial
from .unigraphs import DyckDiagram, UnitIntervalGraph, enumerate_nuio, validate_area

_LLT: dict[tuple[int, ...], SymExpansion] = {}
_X: dict[tuple[int, ...], SymExpansion] = {}


def _compute_pair(area: tuple[int, ...]) -> tuple[tuple[int, ...], SymExpansion, SymExpansion]:
    g = UnitIntervalGraph.from_area(area)
    return area, quasi_to_monomial(llt_via_F(g.dyck)), chromatic_bruteforce(g)


def llt_m(area: Sequence[int]) -> SymExpansion:
    area = tuple(area)
    if area not in _LLT:
        _LLT[area] = quasi_to_monomial(llt_via_F(DyckDiagram(area)))
    return _LLT[area]


def x_m(area: Sequence[int]) -> SymExpansion:
    area = tuple(area)
    if area not in _X:
        _X[area] = chromatic_bruteforce(UnitIntervalGraph.from_area(area))
    return _X[area]


def warm_cache(areas: Sequence[tuple[int, ...]], workers: int = 1) -> None:
    todo = [a for a in areas if a not in _LLT or a not in _X]
    if workers > 1 and len(todo) > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            results = list(ex.map(_compute_pair, todo, chunksize=4))
    else:
        results = [_compute_pair(a) for a in todo]
    for a, llt, x in results:
        _LLT[a], _X[a] = llt, x


def lowered(a: Sequence[int], i: int, z: int) -> tuple[int, ...]:
    """``a`` with entry ``i`` (1-based) lowered by ``z``; validated."""
    out = list(a)
    out[i - 1] -= z
    out = validate_area(out)
    if out[-1] != 0:
        raise InvalidArea("last entry must be 0", len(out))
    return out


def _entry(a: Sequence[int], j: int) -> int:
    """``a_j`` with the convention ``a_0 = 1``."""
    return 1 if j == 0 else a[j - 1]


def chain_holds(a: Sequence[int], i: int, ell: int) -> bool:
    """``a_{i+a_i-j} = a_{i+a_i-j+1} + 1`` for ``j = 1, ..., ell - 1``."""
    n = len(a)
    top = i + a[i - 1]
    for j in range(1, ell):
        lo, hi = top - j, top - j + 1
        if not (1 <= lo and hi <= n):
            return False
        if a[lo - 1] != a[hi - 1] + 1:
            return False
    return True


def _witness(expr: SymExpansion):
    la, c = expr.items()[0]
    lo = c.low_degree
    return {"partition": list(la), "q_power": lo, "value": str(c[lo])}


def _combine(terms: Sequence[tuple[QPoly, tuple[int, ...]]], fn) -> SymExpansion:
    out = None
    for c, area in terms:
        t = fn(area).scale(c)
        out = t if out is None else out + t
    return out


def _check_linear(relation: str, params: dict, hyp: bool, lhs, rhs) -> RelationReport:
    """``sum lhs = sum rhs`` in both LLT and chromatic form; terms are ``(coeff, area)``."""
    terms = list(lhs) + [(-c, a) for c, a in rhs]
    d_llt = _combine(terms, llt_m)
    d_x = _combine(terms, x_m)
    ok_llt, ok_x = not d_llt, not d_x
    witness = None
    if not ok_llt:
        witness = {"form": "llt", **_witness(d_llt)}
    elif not ok_x:
        witness = {"form": "chromatic", **_witness(d_x)}
    detail = {"llt_ok": ok_llt, "chromatic_ok": ok_x}
    return RelationReport(relation, params, hyp, ok_llt and ok_x, witness, detail)


def _invalid(relation: str, params: dict, err: InvalidArea) -> RelationReport:
    return RelationReport(relation, params, False, None, {"reason": str(err)},
                          {"invalid_area": True})


def verify_lee(a: Sequence[int], i: int) -> RelationReport:
    """``L(a^0) + q L(a^2) = (1 + q) L(a^1)`` when ``a_{i-1} + 1 <= a_i`` and the
    step condition ``a_{i+a_i-1} = a_{i+a_i} + 1`` hold.

    The identity is evaluated even when the hypothesis fails, so the report
    shows whether the hypothesis was needed.
    """
    a = validate_area(a)
    params = {"area": list(a), "i": i}
    if not 1 <= i <= len(a):
        raise RangeError(f"row {i} outside 1..{len(a)}")
    try:
        a0, a1, a2 = (lowered(a, i, z) for z in range(3))
    except InvalidArea as err:
        return _invalid("lee", params, err)
    hyp = _entry(a, i - 1) + 1 <= a[i - 1] and chain_holds(a, i, 2)
    q = QPoly.monomial(1)
    return _check_linear("lee", params, hyp, [(ONE, a0), (q, a2)], [(q_int(2), a1)])


def verify_k_deletion(a: Sequence[int], i: int, ell: int, k: int) -> list[RelationReport]:
    """Both ``k``-deletion identities for ``a^0, ..., a^ell``:

    (a) ``L(a^0) + q [k] L(a^{k+1}) = [k+1] L(a^k)``
    (b) ``[ell-k] L(a^0) + q^{ell-k} [k] L(a^ell) = [ell] L(a^k)``
    """
    a = validate_area(a)
    n = len(a)
    if not 2 <= ell <= n - 1 or not 1 <= k <= ell - 1 or not 1 <= i <= n:
        raise RangeError(f"need 2 <= ell <= n-1, 1 <= k <= ell-1, 1 <= i <= n; got i={i}, ell={ell}, k={k}, n={n}")
    base = {"area": list(a), "i": i, "ell": ell, "k": k}
    try:
        az = [lowered(a, i, z) for z in range(ell + 1)]
    except InvalidArea as err:
        return [_invalid("kdel-a", base, err), _invalid("kdel-b", base, err)]
    hyp = _entry(a, i - 1) + ell - 1 <= a[i - 1] and chain_holds(a, i, ell)
    q = QPoly.monomial(1)
    ra = _check_linear("kdel-a", base, hyp,
                       [(ONE, az[0]), (q * q_int(k), az[k + 1])], [(q_int(k + 1), az[k])])
    rb = _check_linear("kdel-b", base, hyp,
                       [(q_int(ell - k), az[0]), (QPoly.monomial(ell - k) * q_int(k), az[ell])],
                       [(q_int(ell), az[k])])
    return [ra, rb]


def verify_equivalence(coeffs: Sequence[QPoly], graphs: Sequence[UnitIntervalGraph]) -> RelationReport:
    """``sum c_i X_{G_i}`` and ``sum c_i LLT_{G_i}`` vanish together."""
    if len(coeffs) != len(graphs) or not graphs:
        raise RangeError("need one coefficient per graph and at least one graph")
    terms = [(QPoly.coerce(c), g.area) for c, g in zip(coeffs, graphs)]
    if len({len(a) for _, a in terms}) != 1:
        raise RangeError("all graphs must have the same number of vertices")
    d_llt, d_x = _combine(terms, llt_m), _combine(terms, x_m)
    zero_llt, zero_x = not d_llt, not d_x
    params = {"coeffs": [c.to_json() for c, _ in terms], "areas": [list(a) for _, a in terms]}
    witness = None
    if zero_llt != zero_x:
        witness = {"llt_zero": zero_llt, "chromatic_zero": zero_x}
    return RelationReport("equivalence", params, True, zero_llt == zero_x, witness,
                          {"llt_zero": zero_llt, "chromatic_zero": zero_x})


def scan_relations(n: int, workers: int = 1) -> Iterator[RelationReport]:
    """Every ``(a, i)`` Lee instance, then every ``(a, i, ell, k)`` k-deletion instance,
    over all area sequences of length ``n``, in lexicographic order."""
    if not 1 <= n <= 7:
        raise RangeError(f"scan needs 1 <= n <= 7, got {n}")
    areas = sorted(g.area for g in enumerate_nuio(n))
    warm_cache(areas, workers)
    for a in areas:
        for i in range(1, n + 1):
            yield verify_lee(a, i)
    for a in areas:
        for i in range(1, n + 1):
            for ell in range(2, n):
                for k in range(1, ell):
                    yield from verify_k_deletion(a, i, ell, k)


def summarize(reports: Sequence[RelationReport]) -> dict:
    out: dict[str, dict[str, int]] = {}
    for r in reports:
        row = out.setdefault(r.relation, {})
        row[r.status] = row.get(r.status, 0) + 1
    return out
