"""Text and LaTeX output for expansions, with q-integers folded back into brackets."""

from __future__ import annotations

from .qpoly import ONE, QPoly, q_int
from .symfunc import SymExpansion


def _partition_index(la) -> str:
    if len(la) == 1 and la[0] < 10:
        return str(la[0])
    sep = "," if any(p >= 10 for p in la) else ""
    return "{" + sep.join(map(str, la)) + "}"


def factor_brackets(p: QPoly) -> tuple[int, int, list[int], QPoly]:
    """Split ``p = sign * q^a * prod [k]_q * rest``, dividing out ``[k]_q`` greedily
    from the largest ``k`` down. Returns ``(sign, a, ks, rest)``."""
    if not p:
        return 1, 0, [], p
    sign = -1 if all(c <= 0 for c in p.coeffs) else 1
    a = p.low_degree
    rest = QPoly(p.coeffs[a:]) * sign
    ks = []
    k = rest.degree + 1
    while k >= 2:
        quot, rem = rest.divmod(q_int(k))
        if not rem and quot.is_integral():
            ks.append(k)
            rest = quot
            k = min(k, rest.degree + 1)
        else:
            k -= 1
    return sign, a, sorted(ks, reverse=True), rest


def _fold_factorials(ks: list[int]) -> list[tuple[int, bool, int]]:
    """Group ``[2][3]...[k]`` runs into ``[k]!`` and repeats into powers.

    Returns ``(k, is_factorial, exponent)`` items, largest first.
    """
    pool = list(ks)
    found: dict[tuple[int, bool], int] = {}
    while pool:
        best = next((c for c in sorted(set(pool), reverse=True)
                     if c >= 3 and all(j in pool for j in range(2, c + 1))), None)
        if best is None:
            for k in pool:
                found[(k, False)] = found.get((k, False), 0) + 1
            break
        for j in range(2, best + 1):
            pool.remove(j)
        found[(best, True)] = found.get((best, True), 0) + 1
    return sorted(((k, f, e) for (k, f), e in found.items()), key=lambda t: (-t[0], not t[1]))


def _raw(p: QPoly, latex: bool) -> str:
    s = str(p)
    return _brace_exponents(s) if latex else s


def _brace_exponents(s: str) -> str:
    out, i = [], 0
    while i < len(s):
        if s[i] == "^":
            j = i + 1
            while j < len(s) and s[j].isdigit():
                j += 1
            digits = s[i + 1:j]
            out.append("^{" + digits + "}" if len(digits) > 1 else "^" + digits)
            i = j
        else:
            out.append(s[i])
            i += 1
    return "".join(out)


def qpoly_latex(p: QPoly, fold: bool = True) -> str:
    """LaTeX for a coefficient, e.g. ``q[2]_q[3]_q!``; raw polynomial if nothing folds."""
    if not p:
        return "0"
    if not fold or not p.is_integral():
        return _raw(p, True)
    sign, a, ks, rest = factor_brackets(p)
    parts = []
    if rest != ONE and rest.degree == 0:
        parts.append(str(rest[0]))
    if a:
        parts.append("q" if a == 1 else _brace_exponents(f"q^{a}"))
    if rest.degree > 0:
        raw = _raw(rest, True)
        parts.append(f"({raw})" if (ks or a) else raw)
    for k, fact, e in _fold_factorials(ks):
        b = f"[{k}]_q!" if fact else f"[{k}]_q"
        if e > 1:
            b = f"({b})^{e}" if fact else f"{b}^{e}"
        parts.append(b)
    body = "".join(parts) if parts else "1"
    return ("-" if sign < 0 else "") + body


def expansion_latex(f: SymExpansion, fold: bool = True) -> str:
    """e.g. ``[3]_q e_3 + q e_{21}``."""
    if not f:
        return "0"
    terms = []
    for la, c in f.items():
        basis = f"{f.basis}_{_partition_index(la)}" if la else "1"
        coeff = qpoly_latex(c, fold)
        neg = coeff.startswith("-")
        if neg:
            coeff = coeff[1:]
        if coeff == "1":
            body = basis
        elif la:
            body = f"{coeff} {basis}"
        else:
            body = coeff
        terms.append(("-" if neg else "+", body))
    out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for s, body in terms[1:]:
        out += f" {s} {body}"
    return out


def expansion_text(f: SymExpansion) -> str:
    return str(f)
