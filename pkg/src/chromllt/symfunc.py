"""Homogeneous symmetric functions of a fixed degree with q-polynomial coefficients.

Every object lives in a single degree ``n``. The monomial basis is the hub:
each basis element of ``e``, ``s`` and ``p`` is expanded in ``m`` by an
explicit count, and converting out of ``m`` is a triangular peel in
lexicographic order (which refines dominance).
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Optional

from .combinat.partitions import (
    Composition,
    Partition,
    as_partition,
    coarsenings,
    compositions_of,
    conjugate,
    descents_to_composition,
    partitions_of,
)
from .combinat.rimhooks import k_star
from .combinat.tableaux import descent_set, kostka, syt_enumerate
from .errors import NonIntegral, SizeMismatch
from .qpoly import ONE, ZERO, QPoly, exact_div
from .report import RelationReport

BASES = ("m", "e", "s", "p")


class SymExpansion:
    """A degree-``n`` symmetric function written in one of the bases m, e, s, p.

    Missing keys are zero. Coefficients are :class:`QPoly`; only the ``p``
    basis may carry non-integral ones.
    """

    __slots__ = ("degree", "basis", "_coeffs")

    def __init__(self, degree: int, basis: str, coeffs: Mapping[Partition, object] = ()):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        self.degree = degree
        self.basis = basis
        clean = {}
        for la, c in dict(coeffs).items():
            la = tuple(la)
            if sum(la) != degree:
                raise SizeMismatch(f"{la} is not a partition of {degree}")
            c = QPoly.coerce(c)
            if c:
                clean[as_partition(la)] = clean.get(as_partition(la), ZERO) + c
        self._coeffs = {k: v for k, v in clean.items() if v}
        if basis != "p":
            for la, c in self._coeffs.items():
                if not c.is_integral():
                    raise NonIntegral(f"coefficient of {basis}_{la} is {c}")

    @classmethod
    def basis_element(cls, basis: str, la: Iterable[int], coeff=ONE) -> "SymExpansion":
        la = as_partition(la)
        return cls(sum(la), basis, {la: coeff})

    @classmethod
    def one(cls) -> "SymExpansion":
        return cls(0, "e", {(): ONE})

    def __getitem__(self, la) -> QPoly:
        return self._coeffs.get(as_partition(la), ZERO)

    def items(self):
        return sorted(self._coeffs.items(), reverse=True)

    def support(self) -> list[Partition]:
        return sorted(self._coeffs, reverse=True)

    def __bool__(self):
        return bool(self._coeffs)

    def __len__(self):
        return len(self._coeffs)

    def _same_frame(self, other: "SymExpansion") -> "SymExpansion":
        if self.degree != other.degree:
            raise SizeMismatch(f"degrees {self.degree} and {other.degree} differ")
        return other if other.basis == self.basis else change_basis(other, self.basis)

    def __add__(self, other):
        other = self._same_frame(other)
        out = dict(self._coeffs)
        for la, c in other._coeffs.items():
            out[la] = out.get(la, ZERO) + c
        return SymExpansion(self.degree, self.basis, out)

    def __neg__(self):
        return SymExpansion(self.degree, self.basis, {la: -c for la, c in self._coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "SymExpansion":
        c = QPoly.coerce(c)
        return SymExpansion(self.degree, self.basis, {la: c * v for la, v in self._coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, SymExpansion):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, SymExpansion):
            return NotImplemented
        if self.degree != other.degree:
            return False
        if other.basis != self.basis:
            other = change_basis(other, self.basis)
        return self._coeffs == other._coeffs

    __hash__ = None

    def map_coeffs(self, f) -> "SymExpansion":
        return SymExpansion(self.degree, self.basis, {la: f(c) for la, c in self._coeffs.items()})

    def at_q1(self) -> "SymExpansion":
        return self.map_coeffs(lambda c: QPoly.const(c(1)))

    def q_degree(self) -> int:
        return max((c.degree for c in self._coeffs.values()), default=-1)

    def q_slice(self, i: int) -> "SymExpansion":
        """The coefficient of ``q^i`` as a q-free symmetric function."""
        return SymExpansion(self.degree, self.basis, {la: c[i] for la, c in self._coeffs.items()})

    def to_basis(self, basis: str) -> "SymExpansion":
        return change_basis(self, basis)

    def __repr__(self):
        return f"SymExpansion({self.degree}, {self.basis!r}, {dict(self.items())!r})"

    def __str__(self):
        if not self._coeffs:
            return "0"
        parts = []
        for la, c in self.items():
            name = f"{self.basis}{''.join(map(str, la))}" if la else "1"
            cs = str(c)
            if cs == "1":
                parts.append(name)
            else:
                parts.append(f"({cs})*{name}")
        return " + ".join(parts)

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "basis": self.basis,
            "coeffs": [{"partition": list(la), "poly": c.to_json()} for la, c in self.items()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "SymExpansion":
        return cls(
            data["degree"],
            data["basis"],
            {tuple(t["partition"]): QPoly.from_json(t["poly"]) for t in data["coeffs"]},
        )


class QuasiExpansion:
    """A degree-``n`` quasisymmetric function in the fundamental basis ``F``."""

    __slots__ = ("degree", "_coeffs")

    def __init__(self, degree: int, coeffs: Mapping[Composition, object] = ()):
        self.degree = degree
        clean = {}
        for alpha, c in dict(coeffs).items():
            alpha = tuple(alpha)
            if sum(alpha) != degree or any(a <= 0 for a in alpha):
                raise SizeMismatch(f"{alpha} is not a composition of {degree}")
            c = QPoly.coerce(c)
            if c:
                clean[alpha] = clean.get(alpha, ZERO) + c
        self._coeffs = {k: v for k, v in clean.items() if v}

    def __getitem__(self, alpha) -> QPoly:
        return self._coeffs.get(tuple(alpha), ZERO)

    def items(self):
        return sorted(self._coeffs.items())

    def __eq__(self, other):
        return isinstance(other, QuasiExpansion) and self.degree == other.degree and self._coeffs == other._coeffs

    __hash__ = None

    def __add__(self, other):
        out = dict(self._coeffs)
        for a, c in other._coeffs.items():
            out[a] = out.get(a, ZERO) + c
        return QuasiExpansion(self.degree, out)

    def __repr__(self):
        return f"QuasiExpansion({self.degree}, {dict(self.items())!r})"

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "basis": "F",
            "coeffs": [{"composition": list(a), "poly": c.to_json()} for a, c in self.items()],
        }


# ------------------------------------------------------------ transition data

def _count_matrices(rows: tuple[int, ...], cols: tuple[int, ...], binary: bool) -> int:
    """Nonnegative integer (or 0/1) matrices with the given margins, where each
    row places its whole sum in one column unless ``binary``.

    ``binary=True`` counts 0/1 matrices (the e-to-m coefficients).
    ``binary=False`` counts ways to drop each row sum into a single column
    (the p-to-m coefficients).
    """

    @lru_cache(maxsize=None)
    def rec(k: int, remaining: tuple[int, ...]) -> int:
        if k == len(rows):
            return 1 if not any(remaining) else 0
        r = rows[k]
        total = 0
        if binary:
            idx = [j for j, c in enumerate(remaining) if c > 0]
            if len(idx) < r:
                return 0
            from itertools import combinations

            for pick in combinations(idx, r):
                nxt = list(remaining)
                for j in pick:
                    nxt[j] -= 1
                total += rec(k + 1, tuple(nxt))
        else:
            for j, c in enumerate(remaining):
                if c >= r:
                    nxt = list(remaining)
                    nxt[j] -= r
                    total += rec(k + 1, tuple(nxt))
        return total

    return rec(0, cols)


@lru_cache(maxsize=None)
def to_monomial_matrix(basis: str, n: int) -> dict[Partition, dict[Partition, int]]:
    """``b_la = sum_mu M[la][mu] m_mu`` for the basis ``b``."""
    parts = partitions_of(n)
    out = {}
    for la in parts:
        row = {}
        for mu in parts:
            if basis == "m":
                c = int(la == mu)
            elif basis == "s":
                c = kostka(la, mu)
            elif basis == "e":
                c = _count_matrices(la, mu, binary=True)
            elif basis == "p":
                c = _count_matrices(la, mu, binary=False)
            else:
                raise ValueError(basis)
            if c:
                row[mu] = c
        out[la] = row
    return out


def _expand_in_m(f: SymExpansion) -> dict[Partition, QPoly]:
    mat = to_monomial_matrix(f.basis, f.degree)
    acc: dict[Partition, QPoly] = defaultdict(lambda: ZERO)
    for la, c in f._coeffs.items():
        for mu, k in mat[la].items():
            acc[mu] = acc[mu] + c * k
    return {k: v for k, v in acc.items() if v}


def _peel_from_m(coeffs: dict[Partition, QPoly], basis: str, n: int) -> dict[Partition, QPoly]:
    work = dict(coeffs)
    out: dict[Partition, QPoly] = {}
    if basis == "m":
        return work
    mat = to_monomial_matrix(basis, n)
    while work:
        if basis == "p":
            mu = min(work)
            key, lead = mu, mat[mu][mu]
        elif basis == "s":
            mu = max(work)
            key, lead = mu, 1
        else:  # e: the top monomial of e_la is m_{la'}
            mu = max(work)
            key, lead = conjugate(mu), 1
        c = work[mu] if lead == 1 else work[mu] * Fraction(1, lead)
        out[key] = out.get(key, ZERO) + c
        for nu, k in mat[key].items():
            v = work.get(nu, ZERO) - c * k
            if v:
                work[nu] = v
            else:
                work.pop(nu, None)
    return out


def change_basis(f: SymExpansion, target: str) -> SymExpansion:
    """Same symmetric function written in ``target``.

    Raises :class:`NonIntegral` if leaving the ``p`` basis produces a
    non-integral coefficient.
    """
    if target == f.basis:
        return f
    coeffs = _peel_from_m(_expand_in_m(f), target, f.degree)
    if target != "p":
        for la, c in coeffs.items():
            if not c.is_integral():
                raise NonIntegral(f"{target}_{la} coefficient {c} is not integral")
    return SymExpansion(f.degree, target, coeffs)


# -------------------------------------------------------------------- products

def multiply(f: SymExpansion, g: SymExpansion) -> SymExpansion:
    """Product, computed in the e basis (``e_la e_mu = e_{la u mu}``), returned in ``f``'s basis."""
    fe, ge = change_basis(f, "e"), change_basis(g, "e")
    out: dict[Partition, QPoly] = defaultdict(lambda: ZERO)
    for la, a in fe._coeffs.items():
        for mu, b in ge._coeffs.items():
            key = as_partition(la + mu)
            out[key] = out[key] + a * b
    return change_basis(SymExpansion(f.degree + g.degree, "e", out), f.basis)


def multiply_monomial(f: SymExpansion, g: SymExpansion) -> SymExpansion:
    """Product through monomial coefficients, independent of :func:`multiply`.

    ``[x^nu](f g) = sum over nu = a + b of [x^a] f * [x^b] g``, padding
    ``nu`` with zeros up to length ``deg f + deg g``.
    """
    fm = dict(_expand_in_m(f)) if f.basis != "m" else dict(f._coeffs)
    gm = dict(_expand_in_m(g)) if g.basis != "m" else dict(g._coeffs)
    n = f.degree + g.degree
    out = {}
    for nu in partitions_of(n):
        total = ZERO
        for a in _splits(nu, f.degree):
            b = tuple(x - y for x, y in zip(nu, a))
            ca = fm.get(as_partition(a))
            if ca is None:
                continue
            cb = gm.get(as_partition(b))
            if cb is None:
                continue
            total = total + ca * cb
        if total:
            out[nu] = total
    return change_basis(SymExpansion(n, "m", out), f.basis)


def _splits(nu: Partition, k: int):
    """Vectors ``a`` with ``0 <= a_i <= nu_i`` and ``sum a = k``."""

    def rec(i, rem, acc):
        if i == len(nu):
            if rem == 0:
                yield tuple(acc)
            return
        for x in range(min(nu[i], rem), -1, -1):
            yield from rec(i + 1, rem - x, acc + [x])

    yield from rec(0, k, [])


def power(f: SymExpansion, k: int) -> SymExpansion:
    out = SymExpansion.one()
    for _ in range(k):
        out = multiply(out, f) if out.degree else f
    return change_basis(out, f.basis)


# ------------------------------------------------------------ quasisymmetric

def sym_to_quasi(f: SymExpansion) -> QuasiExpansion:
    """Fundamental expansion: ``s_la = sum_{T in SYT(la)} F_{co(D(T))}``."""
    fs = change_basis(f, "s")
    acc: dict[Composition, QPoly] = defaultdict(lambda: ZERO)
    for la, c in fs._coeffs.items():
        for t in syt_enumerate(la):
            acc[descents_to_composition(descent_set(t), f.degree)] += c
    return QuasiExpansion(f.degree, acc)


@lru_cache(maxsize=None)
def k_star_matrix(n: int) -> dict[Composition, dict[Partition, int]]:
    return {
        alpha: {la: v for la in partitions_of(n) if (v := k_star(alpha, la))}
        for alpha in compositions_of(n)
    }


def quasi_to_schur_elw(d: QuasiExpansion) -> SymExpansion:
    """Schur coefficients ``c_la = sum_alpha d_alpha K*(alpha, la)``.

    The input must be symmetric; that is not checked here.
    """
    mat = k_star_matrix(d.degree)
    acc: dict[Partition, QPoly] = defaultdict(lambda: ZERO)
    for alpha, c in d._coeffs.items():
        for la, v in mat[alpha].items():
            acc[la] = acc[la] + c * v
    return SymExpansion(d.degree, "s", acc)


def quasi_to_monomial(d: QuasiExpansion) -> SymExpansion:
    """Read off ``[m_la] = [M_la] = sum of d_alpha over alpha coarser than la``."""
    out = {}
    for la in partitions_of(d.degree):
        total = ZERO
        for alpha in coarsenings(la):
            total = total + d[alpha]
        if total:
            out[la] = total
    return SymExpansion(d.degree, "m", out)


# ----------------------------------------------------------------- plethysm

def p_shift(f: SymExpansion) -> SymExpansion:
    """Unnormalized ``f[(q - 1)X]``: ``p_k -> (q^k - 1) p_k``, in the p basis."""
    fp = change_basis(f, "p")
    out = {}
    for la, c in fp._coeffs.items():
        factor = ONE
        for k in la:
            factor = factor * (QPoly.monomial(k) - ONE)
        out[la] = c * factor
    return SymExpansion(f.degree, "p", out)


def plethysm_q_shift(f: SymExpansion) -> SymExpansion:
    """``(q - 1)^(-n) f[(q - 1)X]`` in the e basis, divided exactly."""
    shifted = change_basis(p_shift(f), "e")
    den = QPoly((-1, 1)) ** f.degree
    return shifted.map_coeffs(lambda c: exact_div(c, den))


# --------------------------------------------------------------- predicates

def e_positive(f: SymExpansion) -> tuple[bool, Optional[tuple[Partition, int, int]]]:
    """Whether every q-coefficient of every e-coefficient is >= 0.

    The witness is the first ``(partition, q_power, value)`` that is negative.
    """
    fe = change_basis(f, "e")
    for la, c in fe.items():
        for i, v in enumerate(c.coeffs):
            if v < 0:
                return False, (la, i, v)
    return True, None


def s_positive(f: SymExpansion) -> tuple[bool, Optional[tuple[Partition, int, int]]]:
    fs = change_basis(f, "s")
    for la, c in fs.items():
        for i, v in enumerate(c.coeffs):
            if v < 0:
                return False, (la, i, v)
    return True, None


def check_conjecture_sw(f: SymExpansion, edge_count: int, label: str = "") -> RelationReport:
    """e-positivity, palindromicity about ``edge_count / 2`` and e-unimodality of
    the q-slices ``a_0, ..., a_m`` of ``f``."""
    m = edge_count
    fe = change_basis(f, "e")
    params = {"edge_count": m, "graph": label}
    if fe.q_degree() > m:
        return RelationReport(
            "sw-conjecture", params, True, False,
            {"reason": "q-degree exceeds edge count", "q_degree": fe.q_degree()},
        )
    slices = [fe.q_slice(i) for i in range(m + 1)]
    for i, a in enumerate(slices):
        ok, w = e_positive(a)
        if not ok:
            return RelationReport("sw-conjecture", params, True, False,
                                  {"check": "positivity", "i": i, "partition": list(w[0]), "value": w[2]})
    for i in range(m + 1):
        if slices[i] != slices[m - i]:
            la = next(iter(set(slices[i].support()) ^ set(slices[m - i].support())), None)
            if la is None:
                la = next(mu for mu in slices[i].support() if slices[i][mu] != slices[m - i][mu])
            return RelationReport("sw-conjecture", params, True, False,
                                  {"check": "palindromicity", "i": i, "partition": list(la)})
    i = 0
    while 2 * i < m - 1:
        ok, w = e_positive(slices[i + 1] - slices[i])
        if not ok:
            return RelationReport("sw-conjecture", params, True, False,
                                  {"check": "unimodality", "i": i, "partition": list(w[0]), "value": w[2]})
        i += 1
    return RelationReport("sw-conjecture", params, True, True, None)
